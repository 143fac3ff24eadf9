#include "embed.hpp"

namespace mjc {

QubitState QubitState::basis(std::size_t qubits, std::size_t index) {
    QubitState s(qubits);
    s.amps.at(index) = Scalar::one();
    return s;
}

OccupancyLabel occupancy_from_string(std::string_view bits) {
    OccupancyLabel alpha;
    alpha.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("occupancy labels are binary strings");
        alpha.push_back(c == '1');
    }
    if (alpha.empty()) throw ParseError("empty occupancy label");
    return alpha;
}

std::string occupancy_str(const OccupancyLabel& alpha) {
    std::string s;
    for (int b : alpha) s += b ? '1' : '0';
    return s;
}

FockVector embed_single(const QubitState& psi) {
    if (psi.n == 0 || psi.amps.size() != (std::size_t(1) << psi.n))
        throw std::invalid_argument("embed_single: malformed qubit state");
    const std::size_t m = 2 * psi.n;
    FockVector out(m);
    for (std::size_t b = 0; b < psi.amps.size(); ++b) {
        if (psi.amps[b].is_zero()) continue;
        FockKey key = 0;
        for (std::size_t j = 1; j <= psi.n; ++j) {
            const bool bit = (b >> (psi.n - j)) & 1;
            const std::size_t mode = bit ? 2 * j - 1 : 2 * j;
            key |= FockKey(1) << (m - mode);
        }
        out.add_term(key, psi.amps[b]);
    }
    return out;
}

FockVector embed_double(const QubitState& psi) {
    if (psi.n == 0 || psi.amps.size() != (std::size_t(1) << psi.n))
        throw std::invalid_argument("embed_double: malformed qubit state");
    const std::size_t m = 2 * psi.n;
    FockVector out(m);
    for (std::size_t b = 0; b < psi.amps.size(); ++b) {
        if (psi.amps[b].is_zero()) continue;
        FockKey key = 0;
        for (std::size_t j = 1; j <= psi.n; ++j) {
            const bool bit = (b >> (psi.n - j)) & 1;
            if (!bit) {
                key |= FockKey(1) << (m - (2 * j - 1));
                key |= FockKey(1) << (m - 2 * j);
            }
        }
        out.add_term(key, psi.amps[b]);
    }
    return out;
}

MajoranaOperator intertwiner(std::size_t n) {
    OccupancyLabel all(n, 1);
    return mixed_intertwiner(all);
}

MajoranaOperator mixed_intertwiner(const OccupancyLabel& alpha) {
    const std::size_t n = alpha.size();
    if (n == 0) throw std::invalid_argument("mixed_intertwiner: empty label");
    BitVec support(4 * n);
    for (std::size_t j = 1; j <= n; ++j)
        if (alpha[j - 1]) support.set(4 * j - 3);
    return MajoranaOperator(0, std::move(support));
}

int intertwiner_transport_sign(std::size_t n) { return (n * (n - 1) / 2) % 2 ? -1 : 1; }

FockVector embed_mixed(const QubitState& psi, const OccupancyLabel& alpha) {
    if (alpha.size() != psi.n)
        throw std::invalid_argument("embed_mixed: occupancy label length != qubit count");
    return apply_majorana(mixed_intertwiner(alpha), embed_single(psi));
}

std::vector<FockVector> mixed_subspace_basis(const OccupancyLabel& alpha) {
    const std::size_t n = alpha.size();
    std::vector<FockVector> basis;
    basis.reserve(std::size_t(1) << n);
    for (std::size_t b = 0; b < (std::size_t(1) << n); ++b)
        basis.push_back(embed_mixed(QubitState::basis(n, b), alpha));
    return basis;
}

MajoranaOperator embedded_pauli(PauliFamily family, PauliAxis axis, std::size_t j,
                                std::size_t n) {
    if (j == 0 || j > n) throw std::invalid_argument("embedded_pauli: qubit index out of range");
    const std::size_t base = 4 * j;  // cluster modes 4j-3 .. 4j
    auto op = [&](std::size_t a, std::size_t b, int k) {
        BitVec s(4 * n);
        s.set(a);
        s.set(b);
        return MajoranaOperator(k, std::move(s));
    };
    switch (family) {
        case PauliFamily::SingleOcc:
            switch (axis) {
                case PauliAxis::X: return op(base - 3, base, 1);
                case PauliAxis::Y: return op(base - 2, base, 1);
                default: return op(base - 1, base, 1);
            }
        case PauliFamily::DoubleOcc: {
            // Defined by conjugation with c_{4j-3} of the single-occupancy form.
            const MajoranaOperator c = MajoranaOperator::single(2 * n, base - 3);
            const MajoranaOperator bar = embedded_pauli(PauliFamily::SingleOcc, axis, j, n);
            return c * bar * c;
        }
        default:
            switch (axis) {
                case PauliAxis::X: return op(base - 2, base - 1, 3);
                case PauliAxis::Y: return op(base - 2, base, 1);
                default: return op(base - 1, base, 1);
            }
    }
}

MajoranaOperator pair_stabilizer(std::size_t j, std::size_t n) {
    if (j == 0 || j > n) throw std::invalid_argument("pair_stabilizer: index out of range");
    BitVec s(4 * n);
    for (std::size_t mu = 4 * j - 3; mu <= 4 * j; ++mu) s.set(mu);
    return MajoranaOperator(0, std::move(s));
}

}  // namespace mjc
