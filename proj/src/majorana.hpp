#pragma once

#include <string>
#include <string_view>

#include "gf2.hpp"

namespace mjc {

// Phase exponents live in Z_4: the stored value k denotes the phase i^k.
inline int phase_mod4(int k) { return ((k % 4) + 4) % 4; }
std::string phase_token(int k);          // "+1", "+i", "-1", "-i"
int parse_phase_token(std::string_view);  // -1 if not a phase token

// An element of the finite Majorana group: i^k * c_{u1} c_{u2} ... with
// indices strictly increasing (standard order). The support is a subset of
// the 2M Majorana coordinates 1..2M.
class MajoranaOperator {
  public:
    MajoranaOperator(int phase_k, BitVec support)
        : phase_k_(phase_mod4(phase_k)), support_(std::move(support)) {
        if (support_.size() % 2 != 0)
            throw std::invalid_argument("MajoranaOperator: support length must be 2M");
    }
    static MajoranaOperator identity(std::size_t modes) {
        return MajoranaOperator(0, BitVec(2 * modes));
    }
    static MajoranaOperator single(std::size_t modes, std::size_t mu);  // c_mu
    static MajoranaOperator from_indices(std::size_t modes, std::initializer_list<std::size_t> mus,
                                         int phase_k = 0);

    std::size_t modes() const { return support_.size() / 2; }          // M
    std::size_t majorana_modes() const { return support_.size(); }     // 2M
    int phase_exponent() const { return phase_k_; }
    const BitVec& support() const { return support_; }
    std::size_t weight() const { return support_.count(); }
    bool is_even() const { return weight() % 2 == 0; }
    bool is_identity() const { return phase_k_ == 0 && !support_.any(); }
    // c_u are Hermitian; a product is Hermitian iff i^k squares against the
    // reversal sign: k + w(w-1)/2 even.
    bool is_hermitian() const;
    MajoranaOperator adjoint() const;

    friend MajoranaOperator operator*(const MajoranaOperator& a, const MajoranaOperator& b);
    friend bool operator==(const MajoranaOperator& a, const MajoranaOperator& b) {
        return a.phase_k_ == b.phase_k_ && a.support_ == b.support_;
    }
    friend bool operator!=(const MajoranaOperator& a, const MajoranaOperator& b) {
        return !(a == b);
    }

    bool commutes_with(const MajoranaOperator& o) const {
        return symplectic_form(support_, o.support_) == 0;
    }

    // "phase c" syntax, e.g. "+1 c1 c4 c5"; identity prints as "+1".
    std::string str() const;
    // Accepts an optional leading phase token followed by c<index> tokens in
    // strictly increasing order. modes == 0 infers M from the largest index.
    static MajoranaOperator parse(std::string_view text, std::size_t modes = 0);

  private:
    int phase_k_;
    BitVec support_;
};

// An M-qubit Pauli string with tracked phase i^k. Qubit I carries the letter
// given by the bit pair (z_I, x_I): (0,0) I, (0,1) X, (1,1) Y, (1,0) Z.
class PauliOperator {
  public:
    explicit PauliOperator(std::size_t qubits) : z_(qubits), x_(qubits) {}
    PauliOperator(int phase_k, BitVec z, BitVec x)
        : phase_k_(phase_mod4(phase_k)), z_(std::move(z)), x_(std::move(x)) {
        if (z_.size() != x_.size()) throw std::invalid_argument("PauliOperator: z/x mismatch");
    }
    static PauliOperator identity(std::size_t qubits) { return PauliOperator(qubits); }
    static PauliOperator from_letters(std::string_view letters, int phase_k = 0);

    std::size_t qubits() const { return z_.size(); }
    int phase_exponent() const { return phase_k_; }
    const BitVec& zbits() const { return z_; }
    const BitVec& xbits() const { return x_; }
    // Letter codes: 0 I, 1 X, 2 Z, 3 Y (the code is 2*z + x).
    int letter(std::size_t i) const { return 2 * int(z_.get(i)) + int(x_.get(i)); }
    char letter_char(std::size_t i) const { return "IXZY"[letter(i)]; }
    std::string letters() const;
    std::size_t weight() const;  // number of non-identity letters

    // Symplectic-basis coordinates: z_I at position 2I-1, x_I at 2I.
    BitVec symplectic_coordinates() const;

    friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
    friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
        return a.phase_k_ == b.phase_k_ && a.z_ == b.z_ && a.x_ == b.x_;
    }
    friend bool operator!=(const PauliOperator& a, const PauliOperator& b) { return !(a == b); }
    bool commutes_with(const PauliOperator& o) const;

    std::string str() const;  // "+1 XYZI"
    static PauliOperator parse(std::string_view text);

  private:
    int phase_k_ = 0;
    BitVec z_, x_;
};

// Jordan-Wigner string of a single Majorana mode: c_{2I-1} = Z..Z X at I,
// c_{2I} = Z..Z Y at I.
PauliOperator jw_string(std::size_t mu, std::size_t modes);

// Bit-exact conversions (phases included). The phase is obtained by
// multiplying the Jordan-Wigner strings of the support in standard order;
// the GF(2) part agrees with the basis-change matrices of gf2.
PauliOperator majorana_to_pauli(const MajoranaOperator& op);
MajoranaOperator pauli_to_majorana(const PauliOperator& op);

}  // namespace mjc
