#pragma once

#include <map>
#include <string>
#include <vector>

#include "majorana.hpp"
#include "scalar.hpp"

namespace mjc {

// Occupation bitstring for M fermionic modes, packed so that the occupation
// of mode 1 sits at the highest of the M used bits. Integer order on keys is
// then exactly lexicographic order on the printed strings "k1 k2 ... kM".
using FockKey = std::uint64_t;

constexpr std::size_t kMaxModes = 62;

inline bool key_bit(FockKey key, std::size_t mode, std::size_t modes) {
    return (key >> (modes - mode)) & 1;
}
inline FockKey key_toggle(FockKey key, std::size_t mode, std::size_t modes) {
    return key ^ (FockKey(1) << (modes - mode));
}
// Number of occupied modes strictly below `mode` (the anticommutation string).
inline std::size_t key_occupied_below(FockKey key, std::size_t mode, std::size_t modes) {
    if (mode <= 1) return 0;
    return static_cast<std::size_t>(std::popcount(key >> (modes - mode + 1)));
}
std::string key_str(FockKey key, std::size_t modes);
FockKey key_from_str(std::string_view bits, std::size_t modes);

// Sparse vector in the 2^M-dimensional Fock space with exact amplitudes.
// Zero amplitudes are never stored; term order is deterministic (key order).
class FockVector {
  public:
    explicit FockVector(std::size_t modes);
    static FockVector vacuum(std::size_t modes) { return basis_state(modes, 0); }
    static FockVector basis_state(std::size_t modes, FockKey key);

    std::size_t modes() const { return modes_; }
    bool is_zero() const { return amps_.empty(); }
    std::size_t term_count() const { return amps_.size(); }
    const std::map<FockKey, Scalar>& terms() const { return amps_; }
    Scalar amplitude(FockKey key) const;

    FockVector& add_term(FockKey key, const Scalar& amp);  // accumulates, drops zeros
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Scalar& s);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Scalar& s, FockVector v) { return v *= s; }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.modes_ == b.modes_ && a.amps_ == b.amps_;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    std::string str() const;  // single-line rendering for diagnostics

  private:
    std::size_t modes_;
    std::map<FockKey, Scalar> amps_;
};

// Creation p_I and annihilation n_I with the ordered-product sign rule:
// p_I |k> = (-1)^{k_1+...+k_{I-1}} |k with k_I set> when k_I = 0, else 0.
FockVector create(std::size_t mode, const FockVector& v);
FockVector annihilate(std::size_t mode, const FockVector& v);

// Applies i^k c_{u1}...c_{uw} via c_{2I-1} = p_I + n_I, c_{2I} = i(p_I - n_I),
// factors applied right to left. Amplitudes stay Gaussian-rational.
FockVector apply_majorana(const MajoranaOperator& op, const FockVector& v);

// Applies an M-qubit Pauli string to the occupation basis under the
// Jordan-Wigner identification (mode I = qubit I, occupied = |1>). This is
// the second, independent route to the action of a converted operator.
FockVector apply_pauli(const PauliOperator& op, const FockVector& v);

// The chirality operator: full support with phase (-i)^M; multiplies every
// m-particle basis state by (-1)^m.
MajoranaOperator chirality(std::size_t modes);

// Hermitian inner product, conjugate-linear in the first argument.
Scalar inner(const FockVector& u, const FockVector& v);

// Splits by occupation weight (particle number).
std::map<std::size_t, FockVector> particle_sectors(const FockVector& v);

enum class ChiralitySector { Zero, Plus, Minus, Mixed };
ChiralitySector chirality_sector(const FockVector& v);
std::string chirality_sector_name(ChiralitySector s);

// State file format: one term per line, "<scalar> |<bits>>", keys ascending.
// Parsing accepts blank lines, '#' comments and a trailing U+27E9 ketmark.
std::string to_state_text(const FockVector& v);
FockVector parse_state_text(std::string_view text, std::size_t modes = 0);

}  // namespace mjc
