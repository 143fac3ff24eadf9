#pragma once

#include <array>
#include <vector>

#include "fock.hpp"

namespace mjc {
namespace e8 {

// The 240 roots, stored doubled so every coordinate is an integer:
// 112 vectors 2(+-e_p +- e_q) and 128 vectors (+-1,...,+-1) with an even
// number of minus signs. All roots have squared length 2 (doubled: 8).
struct RootSystem {
    std::vector<std::array<int, 8>> doubled;

    std::size_t size() const { return doubled.size(); }
    std::array<Rational, 8> root(std::size_t s) const;
    // Index of a root given undoubled rational coordinates; -1 if not a root.
    std::ptrdiff_t find(const std::array<Rational, 8>& alpha) const;
};

const RootSystem& roots();

using Amplitudes = std::array<Scalar, 8>;

// Invariant degrees 2p and the power sums Pi_{2p}(psi) = sum_s (root_s . psi)^{2p}.
inline constexpr std::array<int, 8> kInvariantDegrees = {2, 8, 12, 14, 18, 20, 24, 30};
std::array<Scalar, 8> evaluate_invariants(const Amplitudes& psi);

// Root reflection r_alpha(x) = x - (alpha . x) alpha (alpha . alpha = 2).
// Throws std::invalid_argument if alpha is not a root.
Amplitudes reflect(const std::array<Rational, 8>& alpha, const Amplitudes& psi);
Amplitudes reflect_by_index(std::size_t s, const Amplitudes& psi);

// Exact 8x8 matrix d Pi_{2p} / d psi_i (row k = degree kInvariantDegrees[k]),
// by polynomial differentiation of the root-sum form.
std::array<std::array<Scalar, 8>, 8> invariant_jacobian(const Amplitudes& psi);

// Rank of the Jacobian over Q(i). Rank 8 at a generic point witnesses
// algebraic independence of the eight invariants.
int jacobian_rank(const Amplitudes& psi);

// Fixed generic probe point used by reports and the verification suite.
Amplitudes generic_probe_point();

// Exact check that every antisymmetrized weight-two matrix element between
// distinct basis vectors vanishes: <B_a| c_u c_v |B_b> = 0 for all u < v and
// all a != b (plus plain orthogonality of the basis).
struct CartanCheck {
    bool ok = true;
    std::size_t checked = 0;
    // Each entry: "mu nu alpha beta value".
    std::vector<std::string> nonzero;
};
CartanCheck cartan_commutativity_check(const std::vector<FockVector>& basis);

}  // namespace e8
}  // namespace mjc
