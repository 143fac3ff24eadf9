#include "codes.hpp"

namespace mjc {

namespace {

StabilizerCode must_validate(std::size_t modes, std::vector<MajoranaOperator> gens,
                             const char* what) {
    ValidationResult res = validate(modes, std::move(gens));
    if (!res.valid())
        throw std::logic_error(std::string(what) + ": construction failed validation: " +
                               res.violations.front().detail);
    return *std::move(res.code);
}

MajoranaOperator shared_pauli_product(PauliAxis axis, std::size_t j1, std::size_t j2,
                                      std::size_t n) {
    return embedded_pauli(PauliFamily::Shared, axis, j1, n) *
           embedded_pauli(PauliFamily::Shared, axis, j2, n);
}

}  // namespace

QubitState four_qubit_basis_qubit_state(std::size_t alpha) {
    // Encoded |00>,|01>,|10>,|11> as two-term four-qubit states.
    static constexpr std::size_t kTerms[4][2] = {
        {0b0000, 0b1111}, {0b0101, 0b1010}, {0b1001, 0b0110}, {0b0011, 0b1100}};
    if (alpha > 3) throw std::out_of_range("four-qubit basis index out of 0..3");
    QubitState s(4);
    s.amp(kTerms[alpha][0]) = Scalar::one();
    s.amp(kTerms[alpha][1]) = Scalar::one();
    return s;
}

FourQubitCode four_qubit_code() {
    FourQubitCode c;
    c.stabilizers.push_back(PauliOperator::from_letters("XXXX"));
    c.stabilizers.push_back(PauliOperator::from_letters("ZZZZ"));
    for (std::size_t alpha = 0; alpha < 4; ++alpha) {
        const QubitState qs = four_qubit_basis_qubit_state(alpha);
        FockVector v(4);
        for (std::size_t b = 0; b < qs.amps.size(); ++b)
            if (!qs.amps[b].is_zero()) v.add_term(b, qs.amps[b]);
        c.basis.push_back(std::move(v));
    }
    c.logicals.emplace_back("IX", PauliOperator::from_letters("XIXI"));
    c.logicals.emplace_back("XI", PauliOperator::from_letters("XIIX"));
    c.logicals.emplace_back("IZ", PauliOperator::from_letters("ZIIZ"));
    c.logicals.emplace_back("ZI", PauliOperator::from_letters("ZIZI"));
    return c;
}

FockVector four_qubit_state(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    const FourQubitCode code = four_qubit_code();
    FockVector out(4);
    const std::array<const Scalar*, 4> amps{&a, &b, &c, &d};
    for (std::size_t alpha = 0; alpha < 4; ++alpha) out += *amps[alpha] * code.basis[alpha];
    return out;
}

MerminReport mermin_square_check() {
    MerminReport rep;
    rep.grid_labels = {{"XX", "IX", "XI"}, {"YY", "-ZX", "-XZ"}, {"ZZ", "ZI", "IZ"}};
    const std::vector<std::vector<std::string>> strings = {
        {"XXII", "XIXI", "XIIX"}, {"YYII", "YIYI", "YIIY"}, {"ZZII", "ZIZI", "ZIIZ"}};
    for (const auto& row : strings) {
        std::vector<PauliOperator> ops;
        for (const std::string& s : row) ops.push_back(PauliOperator::from_letters(s));
        rep.grid.push_back(std::move(ops));
    }

    rep.all_weight_two = true;
    for (const auto& row : rep.grid)
        for (const PauliOperator& p : row)
            if (p.weight() != 2) {
                rep.all_weight_two = false;
                rep.failures.push_back("cell " + p.str() + " does not have weight two");
            }

    rep.rows_commute = rep.columns_commute = true;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) {
                if (!rep.grid[r][a].commutes_with(rep.grid[r][b])) {
                    rep.rows_commute = false;
                    rep.failures.push_back("row " + std::to_string(r + 1) + " cells do not commute");
                }
                if (!rep.grid[a][r].commutes_with(rep.grid[b][r])) {
                    rep.columns_commute = false;
                    rep.failures.push_back("column " + std::to_string(r + 1) +
                                           " cells do not commute");
                }
            }

    const FourQubitCode code = four_qubit_code();
    rep.row_products_fix_codespace = true;
    for (std::size_t r = 0; r < 3; ++r) {
        PauliOperator prod = rep.grid[r][0] * rep.grid[r][1] * rep.grid[r][2];
        for (const FockVector& b : code.basis) {
            if (apply_pauli(prod, b) != b) {
                rep.row_products_fix_codespace = false;
                rep.failures.push_back("row " + std::to_string(r + 1) + " product " + prod.str() +
                                       " does not fix the code subspace");
            }
        }
        rep.row_products.push_back(std::move(prod));
    }

    rep.column_products_minus_identity = true;
    const PauliOperator minus_identity(2, BitVec(4), BitVec(4));
    for (std::size_t c = 0; c < 3; ++c) {
        PauliOperator prod = rep.grid[0][c] * rep.grid[1][c] * rep.grid[2][c];
        if (prod != minus_identity) {
            rep.column_products_minus_identity = false;
            rep.failures.push_back("column " + std::to_string(c + 1) + " product is " + prod.str() +
                                   ", expected -1 IIII");
        }
        rep.column_products.push_back(std::move(prod));
    }
    return rep;
}

NamedCode single_occupancy_code(std::size_t n) {
    if (n == 0 || n > 16) throw std::invalid_argument("single_occupancy_code: n out of 1..16");
    std::vector<MajoranaOperator> gens;
    for (std::size_t j = 1; j <= n; ++j) gens.push_back(pair_stabilizer(j, n));
    StabilizerCode code = must_validate(2 * n, gens, "single_occupancy_code");

    NamedCode nc{"single-occupancy",
                 "[" + std::to_string(4 * n) + "," + std::to_string(n) + ",2]",
                 std::move(code),
                 {},
                 {},
                 {},
                 {}};
    const std::size_t dim = std::size_t(1) << n;
    for (std::size_t b = 0; b < dim; ++b) {
        nc.basis.push_back(embed_single(QubitState::basis(n, b)));
        std::string label;
        for (std::size_t j = 1; j <= n; ++j) label += ((b >> (n - j)) & 1) ? '1' : '0';
        nc.basis_labels.push_back(label);
    }
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t mask = std::size_t(1) << (n - j);
        std::string x_label(n, 'I'), z_label(n, 'I');
        x_label[j - 1] = 'X';
        z_label[j - 1] = 'Z';
        nc.logicals.push_back({x_label, embedded_pauli(PauliFamily::SingleOcc, PauliAxis::X, j, n),
                               SignedPermutation::x_type(dim, mask)});
        nc.logicals.push_back({z_label, embedded_pauli(PauliFamily::SingleOcc, PauliAxis::Z, j, n),
                               SignedPermutation::z_type(dim, mask)});
    }
    return nc;
}

namespace {

std::vector<MajoranaOperator> embedded_four_qubit_generators() {
    std::vector<MajoranaOperator> gens;
    for (std::size_t j = 1; j <= 4; ++j) gens.push_back(pair_stabilizer(j, 4));
    // Embedded XXXX and ZZZZ of the four-qubit stabilizer.
    MajoranaOperator g5 = embedded_pauli(PauliFamily::SingleOcc, PauliAxis::X, 1, 4);
    MajoranaOperator g6 = embedded_pauli(PauliFamily::SingleOcc, PauliAxis::Z, 1, 4);
    for (std::size_t j = 2; j <= 4; ++j) {
        g5 = g5 * embedded_pauli(PauliFamily::SingleOcc, PauliAxis::X, j, 4);
        g6 = g6 * embedded_pauli(PauliFamily::SingleOcc, PauliAxis::Z, j, 4);
    }
    gens.push_back(std::move(g5));
    gens.push_back(std::move(g6));
    return gens;
}

std::vector<LogicalEntry> embedded_two_qubit_logicals(std::size_t dim_exp) {
    // Shared-family representatives acting identically on the single and
    // double occupancy subspaces; labels are the encoded two-qubit Paulis.
    const std::size_t dim = std::size_t(1) << dim_exp;
    std::vector<LogicalEntry> out;
    out.push_back({"IX", shared_pauli_product(PauliAxis::X, 1, 3, 4),
                   SignedPermutation::x_type(dim, 1)});
    out.push_back({"XI", shared_pauli_product(PauliAxis::X, 1, 4, 4),
                   SignedPermutation::x_type(dim, 2)});
    out.push_back({"IZ", shared_pauli_product(PauliAxis::Z, 1, 4, 4),
                   SignedPermutation::z_type(dim, 1)});
    out.push_back({"ZI", shared_pauli_product(PauliAxis::Z, 1, 3, 4),
                   SignedPermutation::z_type(dim, 2)});
    return out;
}

}  // namespace

NamedCode embedded_four_qubit_code(Occupancy occ) {
    const MajoranaOperator omega = intertwiner(4);
    std::vector<MajoranaOperator> gens = embedded_four_qubit_generators();
    if (occ == Occupancy::Double) {
        // The double-occupancy code subspace is the intertwiner image, so its
        // stabilizer is the conjugate: the pair stabilizers flip sign, the
        // embedded XXXX and ZZZZ commute with the intertwiner and survive.
        for (MajoranaOperator& g : gens) g = omega * g * omega;
    }
    StabilizerCode code = must_validate(8, std::move(gens), "embedded_four_qubit_code");
    NamedCode nc{occ == Occupancy::Single ? "four-qubit-embedded-single"
                                          : "four-qubit-embedded-double",
                 "[16,2,4]",
                 std::move(code),
                 {},
                 {},
                 {},
                 {}};
    for (std::size_t alpha = 0; alpha < 4; ++alpha) {
        FockVector e = embed_single(four_qubit_basis_qubit_state(alpha));
        if (occ == Occupancy::Double) e = apply_majorana(omega, e);
        nc.basis.push_back(std::move(e));
        const std::string tag = occ == Occupancy::Single ? "E" : "~E";
        nc.basis_labels.push_back(tag + std::to_string(alpha));
    }
    nc.logicals = embedded_two_qubit_logicals(2);
    for (const LogicalEntry& e : nc.logicals)
        nc.recorded_signs.emplace_back("logical " + e.label, e.op.str());
    return nc;
}

std::vector<MajoranaOperator> hastings_generators(std::size_t l) {
    if (l < 3) throw std::invalid_argument("hastings_generators: l must be >= 3");
    if (l > 6) throw std::invalid_argument("hastings_generators: l > 6 exceeds desk scale");
    const std::size_t majorana = std::size_t(1) << l;  // 2M
    const std::size_t modes = majorana / 2;
    std::vector<MajoranaOperator> gens;
    for (std::size_t j = 1; j <= l; ++j) {
        BitVec supp(majorana);
        for (std::size_t mu = 1; mu <= majorana; ++mu)
            if ((mu - 1) >> (j - 1) & 1) supp.set(mu);
        gens.emplace_back(0, std::move(supp));
    }
    gens.push_back(chirality(modes));
    return gens;
}

FockVector glue(const std::array<Scalar, 4>& single_block,
                const std::array<Scalar, 4>& double_block) {
    const MajoranaOperator omega = intertwiner(4);
    FockVector out(8);
    for (std::size_t alpha = 0; alpha < 4; ++alpha) {
        const FockVector e = embed_single(four_qubit_basis_qubit_state(alpha));
        out += single_block[alpha] * e;
        out += double_block[alpha] * apply_majorana(omega, e);
    }
    return out;
}

namespace {

std::vector<LogicalEntry> glued_logicals() {
    std::vector<LogicalEntry> out;
    // First logical qubit: occupancy block. The intertwiner flips it, any
    // pair stabilizer g_j distinguishes the blocks by sign.
    out.push_back({"XII", intertwiner(4), SignedPermutation::x_type(8, 4)});
    out.push_back({"ZII", pair_stabilizer(1, 4), SignedPermutation::z_type(8, 4)});
    out.push_back({"IXI", shared_pauli_product(PauliAxis::X, 1, 4, 4),
                   SignedPermutation::x_type(8, 2)});
    out.push_back({"IZI", shared_pauli_product(PauliAxis::Z, 1, 3, 4),
                   SignedPermutation::z_type(8, 2)});
    out.push_back({"IIX", shared_pauli_product(PauliAxis::X, 1, 3, 4),
                   SignedPermutation::x_type(8, 1)});
    out.push_back({"IIZ", shared_pauli_product(PauliAxis::Z, 1, 4, 4),
                   SignedPermutation::z_type(8, 1)});
    return out;
}

std::vector<FockVector> glued_basis() {
    std::vector<FockVector> basis;
    const MajoranaOperator omega = intertwiner(4);
    for (std::size_t alpha = 0; alpha < 4; ++alpha)
        basis.push_back(embed_single(four_qubit_basis_qubit_state(alpha)));
    for (std::size_t alpha = 0; alpha < 4; ++alpha)
        basis.push_back(apply_majorana(omega, basis[alpha]));
    return basis;
}

std::vector<std::string> three_qubit_labels() {
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < 8; ++b) {
        std::string s;
        for (int j = 2; j >= 0; --j) s += ((b >> j) & 1) ? '1' : '0';
        labels.push_back(s);
    }
    return labels;
}

void attach_recorded_signs(NamedCode& nc) {
    nc.recorded_signs.emplace_back("intertwiner as Pauli string",
                                   majorana_to_pauli(intertwiner(4)).str());
    nc.recorded_signs.emplace_back("g1 as Pauli string",
                                   majorana_to_pauli(pair_stabilizer(1, 4)).str());
    nc.recorded_signs.emplace_back(
        "intertwiner transport sign on embedded basis kets",
        intertwiner_transport_sign(4) > 0 ? std::string("+1") : std::string("-1"));
}

}  // namespace

NamedCode hastings_code(std::size_t l) {
    StabilizerCode code = must_validate(std::size_t(1) << (l - 1), hastings_generators(l),
                                        "hastings_code");
    NamedCode nc{"hastings", "", std::move(code), {}, {}, {}, {}};
    if (l == 4) {
        nc.display = "[16,3,4]";
        nc.basis = glued_basis();
        nc.basis_labels = three_qubit_labels();
        nc.logicals = glued_logicals();
        attach_recorded_signs(nc);
    }
    return nc;
}

NamedCode glued_code() {
    NamedCode nc = hastings_code(4);
    nc.name = "glued";
    return nc;
}

}  // namespace mjc
