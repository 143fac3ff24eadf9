#include <doctest.h>

#include "codes.hpp"

using namespace mjc;

namespace {

FockVector two_term(std::size_t modes, const std::string& a, const std::string& b) {
    FockVector v(modes);
    v.add_term(key_from_str(a, modes), Scalar(1));
    v.add_term(key_from_str(b, modes), Scalar(1));
    return v;
}

}  // namespace

TEST_CASE("four-qubit code basis vectors") {
    const FourQubitCode code = four_qubit_code();
    CHECK(code.basis[0] == two_term(4, "0000", "1111"));
    CHECK(code.basis[1] == two_term(4, "0101", "1010"));
    CHECK(code.basis[2] == two_term(4, "1001", "0110"));
    CHECK(code.basis[3] == two_term(4, "0011", "1100"));
    for (const FockVector& b : code.basis)
        for (const PauliOperator& s : code.stabilizers) CHECK(apply_pauli(s, b) == b);
}

TEST_CASE("four-qubit logical representatives and their products") {
    // ZIIZ * XIIX = -YIIY, matching the sign rule for the encoded XZ.
    const PauliOperator ziiz = PauliOperator::from_letters("ZIIZ");
    const PauliOperator xiix = PauliOperator::from_letters("XIIX");
    CHECK((ziiz * xiix).str() == "-1 YIIY");

    const FourQubitCode code = four_qubit_code();
    // IX maps encoded |00> to |01>.
    const PauliOperator ix = code.logicals[0].second;
    CHECK(apply_pauli(ix, code.basis[0]) == code.basis[1]);
    // ZI gives -1 on encoded |10> and |11>.
    const PauliOperator zi = code.logicals[3].second;
    CHECK(apply_pauli(zi, code.basis[2]) == Scalar(-1) * code.basis[2]);
    CHECK(apply_pauli(zi, code.basis[0]) == code.basis[0]);
}

TEST_CASE("encoded superposition states") {
    CHECK(four_qubit_state(Scalar(1), Scalar(0), Scalar(0), Scalar(0)) ==
          two_term(4, "0000", "1111"));
    const FockVector mix =
        four_qubit_state(Scalar(1), Scalar(0), Scalar(0), Scalar(-1));
    CHECK(mix.amplitude(key_from_str("0011", 4)) == Scalar(-1));
    CHECK(mix.amplitude(key_from_str("0000", 4)) == Scalar(1));
}

TEST_CASE("observable square: rows fix the code space, columns give minus identity") {
    const MerminReport rep = mermin_square_check();
    CHECK(rep.ok());
    CHECK(rep.all_weight_two);
    CHECK(rep.rows_commute);
    CHECK(rep.columns_commute);
    REQUIRE(rep.row_products.size() == 3);
    CHECK(rep.row_products[0].str() == "+1 XXXX");
    CHECK(rep.row_products[1].str() == "+1 YYYY");
    CHECK(rep.row_products[2].str() == "+1 ZZZZ");
    for (const PauliOperator& p : rep.column_products) CHECK(p.str() == "-1 IIII");
}

TEST_CASE("single occupancy named code") {
    const NamedCode nc = single_occupancy_code(2);
    CHECK(nc.code.logical_qubits() == 2);
    CHECK(nc.code.distance(4).value == 2);
    CHECK(nc.basis.size() == 4);
    for (const LogicalEntry& e : nc.logicals)
        CHECK(nc.code.verify_logical(e.op, e.expected, nc.basis).ok());
}

TEST_CASE("embedded four-qubit code, single occupancy: printed basis") {
    const NamedCode nc = embedded_four_qubit_code(Occupancy::Single);
    REQUIRE(nc.basis.size() == 4);
    CHECK(nc.basis[0] == two_term(8, "01010101", "10101010"));
    CHECK(nc.basis[1] == two_term(8, "01100110", "10011001"));
    CHECK(nc.basis[2] == two_term(8, "01101001", "10010110"));
    CHECK(nc.basis[3] == two_term(8, "01011010", "10100101"));
    CHECK(nc.code.logical_qubits() == 2);
    const DistanceResult d = nc.code.distance(4);
    CHECK(d.exact());
    CHECK(d.value == 4);
    CHECK(same_span(nc.code.codespace(), nc.basis));
    for (const LogicalEntry& e : nc.logicals)
        CHECK(nc.code.verify_logical(e.op, e.expected, nc.basis).ok());
}

TEST_CASE("embedded four-qubit code, double occupancy: printed basis") {
    const NamedCode nc = embedded_four_qubit_code(Occupancy::Double);
    REQUIRE(nc.basis.size() == 4);
    CHECK(nc.basis[0] == two_term(8, "00000000", "11111111"));
    CHECK(nc.basis[1] == two_term(8, "11001100", "00110011"));
    CHECK(nc.basis[2] == two_term(8, "11000011", "00111100"));
    CHECK(nc.basis[3] == two_term(8, "11110000", "00001111"));
    CHECK(nc.code.distance(4).value == 4);
    CHECK(same_span(nc.code.codespace(), nc.basis));
    for (const LogicalEntry& e : nc.logicals)
        CHECK(nc.code.verify_logical(e.op, e.expected, nc.basis).ok());
}

TEST_CASE("the two embedded variants share their logical representatives") {
    const NamedCode s = embedded_four_qubit_code(Occupancy::Single);
    const NamedCode d = embedded_four_qubit_code(Occupancy::Double);
    REQUIRE(s.logicals.size() == d.logicals.size());
    for (std::size_t i = 0; i < s.logicals.size(); ++i) {
        CHECK(s.logicals[i].op == d.logicals[i].op);
        // Identical action on both embedded bases.
        CHECK(s.code.verify_logical(s.logicals[i].op, s.logicals[i].expected, s.basis).ok());
        CHECK(d.code.verify_logical(d.logicals[i].op, d.logicals[i].expected, d.basis).ok());
    }
}

TEST_CASE("extra generators of the embedded code have the printed supports") {
    const NamedCode nc = embedded_four_qubit_code(Occupancy::Single);
    const auto& gens = nc.code.generators();
    REQUIRE(gens.size() == 6);
    CHECK(gens[4] == MajoranaOperator::from_indices(8, {1, 4, 5, 8, 9, 12, 13, 16}));
    CHECK(gens[5] == MajoranaOperator::from_indices(8, {3, 4, 7, 8, 11, 12, 15, 16}));
}

TEST_CASE("the stabilizer of the embedded code contains the chirality operator") {
    const NamedCode nc = embedded_four_qubit_code(Occupancy::Single);
    const auto& g = nc.code.generators();
    CHECK(g[0] * g[1] * g[2] * g[3] == chirality(8));
}

TEST_CASE("sixteen-mode generators: supports from the binary pattern, printed strings") {
    const auto gens = hastings_generators(4);
    REQUIRE(gens.size() == 5);
    CHECK(majorana_to_pauli(gens[0]).str() == "+1 XYXYXYXY");
    CHECK(majorana_to_pauli(gens[1]).str() == "+1 IZIZIZIZ");
    CHECK(majorana_to_pauli(gens[2]).str() == "+1 IIZZIIZZ");
    CHECK(majorana_to_pauli(gens[3]).str() == "+1 IIIIZZZZ");
    CHECK(majorana_to_pauli(gens[4]).str() == "+1 ZZZZZZZZ");
    // Column mu of the generator matrix reads the binary digits of mu-1.
    for (std::size_t mu = 1; mu <= 16; ++mu)
        for (std::size_t j = 1; j <= 4; ++j)
            CHECK(gens[j - 1].support().get(mu) == bool((mu - 1) >> (j - 1) & 1));
}

TEST_CASE("sixteen-mode code parameters") {
    const NamedCode nc = hastings_code(4);
    CHECK(nc.code.majorana_modes() == 16);
    CHECK(nc.code.logical_qubits() == 3);
    const DistanceResult d = nc.code.distance(4);
    CHECK(d.exact());
    CHECK(d.value == 4);
    CHECK(nc.code.codespace().size() == 8);
}

TEST_CASE("eight-mode member of the family has no logical qubits") {
    const auto gens = hastings_generators(3);
    const ValidationResult r = validate(4, gens);
    REQUIRE(r.valid());
    CHECK(r.code->logical_qubits() == 0);
    const DistanceResult d = r.code->distance(4);
    CHECK(d.kind == DistanceResult::Kind::NoLogicals);
    CHECK(r.code->codespace().size() == 1);
}

TEST_CASE("thirty-two-mode member: parameters computed, not assumed") {
    const NamedCode nc = hastings_code(5);
    CHECK(nc.code.majorana_modes() == 32);
    CHECK(nc.code.logical_qubits() == 10);
    const DistanceResult d = nc.code.distance(4);
    CHECK(d.exact());
    CHECK(d.value == 4);
}

TEST_CASE("glueing the unit blocks reproduces the labeled basis") {
    const std::array<Scalar, 4> zero{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    std::array<Scalar, 4> e0 = zero;
    e0[0] = Scalar(1);
    CHECK(glue(e0, zero) == two_term(8, "01010101", "10101010"));
    CHECK(glue(zero, e0) == two_term(8, "00000000", "11111111"));
    // A mixed state combines both blocks.
    const FockVector mixed = glue(e0, e0);
    CHECK(mixed.term_count() == 4);
}

TEST_CASE("every glued basis vector is stabilized by all five generators") {
    const NamedCode nc = glued_code();
    REQUIRE(nc.basis.size() == 8);
    for (const FockVector& b : nc.basis)
        for (const MajoranaOperator& g : nc.code.generators())
            CHECK(apply_majorana(g, b) == b);
}

TEST_CASE("glued basis spans the projector-extracted codespace") {
    const NamedCode nc = glued_code();
    CHECK(same_span(nc.code.codespace(), nc.basis));
    // The glue basis vectors are pairwise orthogonal with norm two.
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            CHECK(inner(nc.basis[a], nc.basis[b]) == (a == b ? Scalar(2) : Scalar(0)));
}

TEST_CASE("glued logical dictionary acts with the expected signed permutations") {
    const NamedCode nc = glued_code();
    REQUIRE(nc.logicals.size() == 6);
    for (const LogicalEntry& e : nc.logicals)
        CHECK(nc.code.verify_logical(e.op, e.expected, nc.basis).ok());
    // The printed representatives.
    CHECK(nc.logicals[0].op == MajoranaOperator::from_indices(8, {1, 5, 9, 13}));       // XII
    CHECK(nc.logicals[1].op == MajoranaOperator::from_indices(8, {1, 2, 3, 4}));        // ZII
    CHECK(nc.logicals[2].op == MajoranaOperator::from_indices(8, {2, 3, 14, 15}, 2));   // IXI
    CHECK(nc.logicals[3].op == MajoranaOperator::from_indices(8, {3, 4, 11, 12}, 2));   // IZI
    CHECK(nc.logicals[4].op == MajoranaOperator::from_indices(8, {2, 3, 10, 11}, 2));   // IIX
    CHECK(nc.logicals[5].op == MajoranaOperator::from_indices(8, {3, 4, 15, 16}, 2));   // IIZ
}

TEST_CASE("single-mode errors have sixteen distinct syndromes") {
    const NamedCode nc = hastings_code(4);
    std::vector<std::string> syndromes;
    for (std::size_t mu = 1; mu <= 16; ++mu)
        syndromes.push_back(nc.code.syndrome(MajoranaOperator::single(8, mu)).str());
    std::sort(syndromes.begin(), syndromes.end());
    CHECK(std::adjacent_find(syndromes.begin(), syndromes.end()) == syndromes.end());
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(hastings_generators(2), std::invalid_argument);
    CHECK_THROWS_AS(single_occupancy_code(0), std::invalid_argument);
    CHECK_THROWS_AS(four_qubit_basis_qubit_state(4), std::out_of_range);
}
