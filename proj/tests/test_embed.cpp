#include <doctest.h>

#include "embed.hpp"

using namespace mjc;

namespace {

// Exact single-qubit Pauli action on an embedded basis index: returns the
// target bit value and the scalar, per the defining 2x2 matrices.
struct PauliAction {
    bool flips;
    // scalar(b) for input bit b
    Scalar scalar(PauliAxis axis, bool b) const {
        switch (axis) {
            case PauliAxis::X: return Scalar(1);
            case PauliAxis::Y: return b ? Scalar(Rational(0), Rational(-1))
                                        : Scalar(Rational(0), Rational(1));
            default: return b ? Scalar(-1) : Scalar(1);
        }
    }
};

bool axis_flips(PauliAxis axis) { return axis != PauliAxis::Z; }

}  // namespace

TEST_CASE("single occupancy embedding of basis states") {
    CHECK(embed_single(QubitState::basis(2, 0b00)) ==
          FockVector::basis_state(4, key_from_str("0101", 4)));
    CHECK(embed_single(QubitState::basis(4, 0b1111)) ==
          FockVector::basis_state(8, key_from_str("10101010", 8)));
    QubitState plus(1);
    plus.amp(0) = Scalar(1);
    plus.amp(1) = Scalar(1);
    FockVector expect(2);
    expect.add_term(key_from_str("01", 2), Scalar(1));
    expect.add_term(key_from_str("10", 2), Scalar(1));
    CHECK(embed_single(plus) == expect);
}

TEST_CASE("double occupancy embedding of basis states") {
    CHECK(embed_double(QubitState::basis(4, 0b1111)) == FockVector::vacuum(8));
    CHECK(embed_double(QubitState::basis(4, 0b0000)) ==
          FockVector::basis_state(8, key_from_str("11111111", 8)));
    CHECK(embed_double(QubitState::basis(1, 0)) ==
          FockVector::basis_state(2, key_from_str("11", 2)));
}

TEST_CASE("embedded states occupy the expected particle sector") {
    for (std::size_t b = 0; b < 16; ++b) {
        const FockVector v = embed_single(QubitState::basis(4, b));
        for (const auto& [k, a] : v.terms()) {
            (void)a;
            CHECK(std::popcount(k) == 4);  // n-particle sector
        }
    }
}

TEST_CASE("intertwiner form") {
    CHECK(intertwiner(4) == MajoranaOperator::from_indices(8, {1, 5, 9, 13}));
    CHECK(majorana_to_pauli(intertwiner(4)).letters() == "YZXIYZXI");
    CHECK(intertwiner(1) == MajoranaOperator::single(2, 1));
}

TEST_CASE("intertwiner transports single to double occupancy with a uniform sign") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const MajoranaOperator omega = intertwiner(n);
        const Scalar sign(Rational(intertwiner_transport_sign(n)));
        for (std::size_t b = 0; b < (std::size_t(1) << n); ++b) {
            const FockVector single = embed_single(QubitState::basis(n, b));
            const FockVector dbl = embed_double(QubitState::basis(n, b));
            CHECK(apply_majorana(omega, single) == sign * dbl);
        }
    }
    CHECK(intertwiner_transport_sign(4) == 1);
    CHECK(intertwiner_transport_sign(2) == -1);
}

TEST_CASE("intertwiner maps the single occupancy span onto the double occupancy span") {
    const std::size_t n = 3;
    const MajoranaOperator omega = intertwiner(n);
    std::vector<FockVector> images, doubles;
    for (std::size_t b = 0; b < (std::size_t(1) << n); ++b) {
        images.push_back(apply_majorana(omega, embed_single(QubitState::basis(n, b))));
        doubles.push_back(embed_double(QubitState::basis(n, b)));
    }
    // Images are exactly +-double basis kets: pairwise orthogonal, full rank.
    for (std::size_t i = 0; i < images.size(); ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < doubles.size(); ++j) {
            const Scalar ip = inner(doubles[j], images[i]);
            if (!ip.is_zero()) {
                CHECK_FALSE(matched);
                matched = true;
                CHECK((ip == Scalar(1) || ip == Scalar(-1)));
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("mixed occupancy subspaces tile the full space at n = 2") {
    std::vector<FockVector> all;
    for (std::size_t a = 0; a < 4; ++a) {
        OccupancyLabel alpha{int(a >> 1 & 1), int(a & 1)};
        const auto basis = mixed_subspace_basis(alpha);
        CHECK(basis.size() == 4);
        for (const FockVector& v : basis) {
            for (const FockVector& w : all) CHECK(inner(w, v).is_zero());
            all.push_back(v);
        }
    }
    CHECK(all.size() == 16);  // dimensions sum to 2^{2n}
    for (const FockVector& v : all) CHECK_FALSE(inner(v, v).is_zero());
}

TEST_CASE("mixed occupancy labels reduce to the single and double embeddings") {
    const OccupancyLabel zeros{0, 0, 0};
    const OccupancyLabel ones{1, 1, 1};
    for (std::size_t b = 0; b < 8; ++b) {
        CHECK(embed_mixed(QubitState::basis(3, b), zeros) ==
              embed_single(QubitState::basis(3, b)));
        const Scalar sign(Rational(intertwiner_transport_sign(3)));
        CHECK(embed_mixed(QubitState::basis(3, b), ones) ==
              sign * embed_double(QubitState::basis(3, b)));
    }
}

TEST_CASE("embedded Pauli representatives have the printed weight-two forms") {
    const std::size_t n = 4;
    CHECK(embedded_pauli(PauliFamily::SingleOcc, PauliAxis::X, 1, n) ==
          MajoranaOperator::from_indices(n * 2, {1, 4}, 1));
    CHECK(embedded_pauli(PauliFamily::SingleOcc, PauliAxis::Y, 1, n) ==
          MajoranaOperator::from_indices(n * 2, {2, 4}, 1));
    CHECK(embedded_pauli(PauliFamily::SingleOcc, PauliAxis::Z, 1, n) ==
          MajoranaOperator::from_indices(n * 2, {3, 4}, 1));
    CHECK(embedded_pauli(PauliFamily::Shared, PauliAxis::X, 2, n) ==
          MajoranaOperator::from_indices(n * 2, {6, 7}, 3));
    CHECK(embedded_pauli(PauliFamily::Shared, PauliAxis::Y, 2, n) ==
          MajoranaOperator::from_indices(n * 2, {6, 8}, 1));
    CHECK(embedded_pauli(PauliFamily::Shared, PauliAxis::Z, 2, n) ==
          MajoranaOperator::from_indices(n * 2, {7, 8}, 1));
}

TEST_CASE("double occupancy representatives are the conjugated single ones") {
    for (std::size_t n : {std::size_t(2), std::size_t(4)}) {
        for (std::size_t j = 1; j <= n; ++j) {
            const MajoranaOperator c = MajoranaOperator::single(2 * n, 4 * j - 3);
            for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
                CHECK(embedded_pauli(PauliFamily::DoubleOcc, axis, j, n) ==
                      c * embedded_pauli(PauliFamily::SingleOcc, axis, j, n) * c);
            }
        }
    }
    // x flips sign under the conjugation, y and z do not.
    CHECK(embedded_pauli(PauliFamily::DoubleOcc, PauliAxis::X, 1, 4) ==
          MajoranaOperator::from_indices(8, {1, 4}, 3));
    CHECK(embedded_pauli(PauliFamily::DoubleOcc, PauliAxis::Y, 1, 4) ==
          embedded_pauli(PauliFamily::SingleOcc, PauliAxis::Y, 1, 4));
}

namespace {

void check_family_action(PauliFamily family, bool on_single, std::size_t n) {
    // The family must act as the literal Pauli matrix on the embedded
    // computational basis of its subspace.
    for (std::size_t j = 1; j <= n; ++j) {
        for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            const MajoranaOperator op = embedded_pauli(family, axis, j, n);
            for (std::size_t b = 0; b < (std::size_t(1) << n); ++b) {
                const QubitState in = QubitState::basis(n, b);
                const FockVector embedded = on_single ? embed_single(in) : embed_double(in);
                const bool bit = (b >> (n - j)) & 1;
                const std::size_t target = axis_flips(axis) ? b ^ (std::size_t(1) << (n - j)) : b;
                const FockVector target_vec = on_single ? embed_single(QubitState::basis(n, target))
                                                        : embed_double(QubitState::basis(n, target));
                const Scalar scalar = PauliAction{}.scalar(axis, bit);
                CHECK(apply_majorana(op, embedded) == scalar * target_vec);
            }
        }
    }
}

}  // namespace

TEST_CASE("single occupancy family acts as the Pauli matrices on its subspace") {
    check_family_action(PauliFamily::SingleOcc, true, 3);
}

TEST_CASE("double occupancy family acts as the Pauli matrices on its subspace") {
    check_family_action(PauliFamily::DoubleOcc, false, 3);
}

TEST_CASE("shared family acts identically on both subspaces") {
    check_family_action(PauliFamily::Shared, true, 3);
    check_family_action(PauliFamily::Shared, false, 3);
    check_family_action(PauliFamily::Shared, true, 4);
    check_family_action(PauliFamily::Shared, false, 4);
}

TEST_CASE("single occupancy x flips the pair with a sign on the double subspace") {
    // Negative control distinguishing the families: the single-occupancy x
    // representative acts as minus the bit flip on double-occupancy kets.
    const MajoranaOperator op = embedded_pauli(PauliFamily::SingleOcc, PauliAxis::X, 1, 2);
    const FockVector d0 = embed_double(QubitState::basis(2, 0b00));
    const FockVector d1 = embed_double(QubitState::basis(2, 0b10));
    CHECK(apply_majorana(op, d0) == Scalar(-1) * d1);
}

TEST_CASE("Pauli algebra holds inside each family (exact Fock action, n <= 3)") {
    for (PauliFamily family : {PauliFamily::SingleOcc, PauliFamily::DoubleOcc,
                               PauliFamily::Shared}) {
        const bool on_single = family != PauliFamily::DoubleOcc;
        const std::size_t n = 3;
        for (std::size_t j = 1; j <= n; ++j) {
            const MajoranaOperator x = embedded_pauli(family, PauliAxis::X, j, n);
            const MajoranaOperator y = embedded_pauli(family, PauliAxis::Y, j, n);
            const MajoranaOperator z = embedded_pauli(family, PauliAxis::Z, j, n);
            const MajoranaOperator xy = x * y;
            const MajoranaOperator iz(z.phase_exponent() + 1, z.support());
            for (std::size_t b = 0; b < (std::size_t(1) << n); ++b) {
                const FockVector v = on_single ? embed_single(QubitState::basis(n, b))
                                               : embed_double(QubitState::basis(n, b));
                CHECK(apply_majorana(xy, v) == apply_majorana(iz, v));
                CHECK(apply_majorana(x * x, v) == v);
                CHECK(apply_majorana(y * y, v) == v);
                CHECK(apply_majorana(z * z, v) == v);
            }
        }
    }
}

TEST_CASE("pair stabilizers fix the single and negate the double occupancy basis") {
    const std::size_t n = 4;
    for (std::size_t j = 1; j <= n; ++j) {
        const MajoranaOperator gj = pair_stabilizer(j, n);
        for (std::size_t b = 0; b < 16; ++b) {
            const FockVector s = embed_single(QubitState::basis(n, b));
            const FockVector d = embed_double(QubitState::basis(n, b));
            CHECK(apply_majorana(gj, s) == s);
            CHECK(apply_majorana(gj, d) == Scalar(-1) * d);
        }
    }
}

TEST_CASE("embeddings are isometries on the computational basis") {
    const std::size_t n = 3;
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) {
            const Scalar delta = a == b ? Scalar(1) : Scalar(0);
            CHECK(inner(embed_single(QubitState::basis(n, a)),
                        embed_single(QubitState::basis(n, b))) == delta);
            CHECK(inner(embed_double(QubitState::basis(n, a)),
                        embed_double(QubitState::basis(n, b))) == delta);
        }
    }
}

TEST_CASE("occupancy label parsing") {
    CHECK(occupancy_from_string("0101") == OccupancyLabel{0, 1, 0, 1});
    CHECK(occupancy_str(OccupancyLabel{1, 0}) == "10");
    CHECK_THROWS_AS(occupancy_from_string("01x1"), ParseError);
    CHECK_THROWS_AS(occupancy_from_string(""), ParseError);
    CHECK_THROWS_AS(embed_mixed(QubitState::basis(2, 0), OccupancyLabel{0, 1, 1}),
                    std::invalid_argument);
}
