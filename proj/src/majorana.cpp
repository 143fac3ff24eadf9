#include "majorana.hpp"

#include <cctype>
#include <sstream>

namespace mjc {

std::string phase_token(int k) {
    switch (phase_mod4(k)) {
        case 0: return "+1";
        case 1: return "+i";
        case 2: return "-1";
        default: return "-i";
    }
}

int parse_phase_token(std::string_view t) {
    if (t == "+1" || t == "1") return 0;
    if (t == "+i" || t == "i") return 1;
    if (t == "-1") return 2;
    if (t == "-i") return 3;
    return -1;
}

MajoranaOperator MajoranaOperator::single(std::size_t modes, std::size_t mu) {
    if (mu == 0 || mu > 2 * modes)
        throw std::out_of_range("Majorana index " + std::to_string(mu) + " out of 1..2M");
    BitVec s(2 * modes);
    s.set(mu);
    return MajoranaOperator(0, std::move(s));
}

MajoranaOperator MajoranaOperator::from_indices(std::size_t modes,
                                                std::initializer_list<std::size_t> mus,
                                                int phase_k) {
    BitVec s(2 * modes);
    for (std::size_t mu : mus) {
        if (mu == 0 || mu > 2 * modes) throw std::out_of_range("Majorana index out of range");
        if (s.get(mu)) throw std::invalid_argument("duplicate Majorana index");
        s.set(mu);
    }
    return MajoranaOperator(phase_k, std::move(s));
}

bool MajoranaOperator::is_hermitian() const {
    const std::size_t w = weight();
    return (static_cast<std::size_t>(phase_k_) + w * (w - 1) / 2) % 2 == 0;
}

MajoranaOperator MajoranaOperator::adjoint() const {
    const std::size_t w = weight();
    // (i^k c_{u1}..c_{uw})^dag = i^{-k} c_{uw}..c_{u1} = i^{-k} (-1)^{w(w-1)/2} c_A
    const int k = -phase_k_ + 2 * static_cast<int>((w * (w - 1) / 2) % 2);
    return MajoranaOperator(k, support_);
}

MajoranaOperator operator*(const MajoranaOperator& a, const MajoranaOperator& b) {
    if (a.majorana_modes() != b.majorana_modes())
        throw std::invalid_argument("MajoranaOperator product: mode-count mismatch");
    const std::vector<std::size_t> ia = a.support_.indices();
    const std::vector<std::size_t> ib = b.support_.indices();
    // Merge the two standard-ordered index lists, counting the transpositions
    // needed to interleave them; equal indices cancel via c^2 = 1.
    BitVec supp(a.majorana_modes());
    std::size_t i = 0, j = 0, swaps = 0;
    while (i < ia.size() && j < ib.size()) {
        if (ia[i] < ib[j]) {
            supp.set(ia[i]);
            ++i;
        } else if (ia[i] > ib[j]) {
            swaps += ia.size() - i;
            supp.set(ib[j]);
            ++j;
        } else {
            swaps += ia.size() - i - 1;
            ++i;
            ++j;
        }
    }
    while (i < ia.size()) supp.set(ia[i++]);
    while (j < ib.size()) supp.set(ib[j++]);
    const int k = a.phase_k_ + b.phase_k_ + 2 * static_cast<int>(swaps % 2);
    return MajoranaOperator(k, std::move(supp));
}

std::string MajoranaOperator::str() const {
    std::string out = phase_token(phase_k_);
    for (std::size_t mu : support_.indices()) out += " c" + std::to_string(mu);
    return out;
}

MajoranaOperator MajoranaOperator::parse(std::string_view text, std::size_t modes) {
    std::istringstream in{std::string(text)};
    std::string tok;
    int phase = 0;
    std::vector<std::size_t> idx;
    bool first = true;
    while (in >> tok) {
        if (first) {
            first = false;
            const int p = parse_phase_token(tok);
            if (p >= 0) {
                phase = p;
                continue;
            }
        }
        if (tok.size() < 2 || (tok[0] != 'c' && tok[0] != 'C'))
            throw ParseError("expected Majorana token 'c<index>', got '" + tok + "'");
        for (std::size_t k = 1; k < tok.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tok[k])))
                throw ParseError("malformed Majorana token '" + tok + "'");
        const unsigned long mu = std::stoul(tok.substr(1));
        if (mu == 0) throw ParseError("Majorana indices start at 1");
        if (!idx.empty() && mu <= idx.back())
            throw ParseError("Majorana indices must be strictly increasing (standard order)");
        idx.push_back(mu);
    }
    std::size_t m = modes;
    if (m == 0) {
        if (idx.empty()) throw ParseError("cannot infer mode count for an identity operator");
        m = (idx.back() + 1) / 2;
    }
    BitVec s(2 * m);
    for (std::size_t mu : idx) {
        if (mu > 2 * m)
            throw ParseError("Majorana index " + std::to_string(mu) + " exceeds 2M = " +
                             std::to_string(2 * m));
        s.set(mu);
    }
    return MajoranaOperator(phase, std::move(s));
}

PauliOperator PauliOperator::from_letters(std::string_view letters, int phase_k) {
    BitVec z(letters.size()), x(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
            case 'I': break;
            case 'X': x.set(i + 1); break;
            case 'Y': z.set(i + 1); x.set(i + 1); break;
            case 'Z': z.set(i + 1); break;
            default:
                throw ParseError(std::string("invalid Pauli letter '") + letters[i] + "'");
        }
    }
    return PauliOperator(phase_k, std::move(z), std::move(x));
}

std::string PauliOperator::letters() const {
    std::string s;
    s.reserve(qubits());
    for (std::size_t i = 1; i <= qubits(); ++i) s.push_back(letter_char(i));
    return s;
}

std::size_t PauliOperator::weight() const {
    std::size_t n = 0;
    for (std::size_t i = 1; i <= qubits(); ++i)
        if (letter(i) != 0) ++n;
    return n;
}

BitVec PauliOperator::symplectic_coordinates() const {
    BitVec v(2 * qubits());
    for (std::size_t i = 1; i <= qubits(); ++i) {
        if (z_.get(i)) v.set(2 * i - 1);
        if (x_.get(i)) v.set(2 * i);
    }
    return v;
}

namespace {
// phase_table[left][right] = exponent g with L*R = i^g (L xor R), letters
// coded 0 I, 1 X, 2 Z, 3 Y. Verified against 2x2 matrices in the test suite.
constexpr int kPhaseTable[4][4] = {
    {0, 0, 0, 0},  // I *
    {0, 0, 3, 1},  // X * {I,X,Z,Y}
    {0, 1, 0, 3},  // Z *
    {0, 3, 1, 0},  // Y *
};
}  // namespace

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    if (a.qubits() != b.qubits())
        throw std::invalid_argument("PauliOperator product: qubit-count mismatch");
    int k = a.phase_k_ + b.phase_k_;
    for (std::size_t i = 1; i <= a.qubits(); ++i) k += kPhaseTable[a.letter(i)][b.letter(i)];
    BitVec z = a.z_;
    z ^= b.z_;
    BitVec x = a.x_;
    x ^= b.x_;
    return PauliOperator(k, std::move(z), std::move(x));
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
    // Paulis commute iff the symplectic product z1.x2 + x1.z2 vanishes.
    const std::size_t s = z_.intersection_count(o.x_) + x_.intersection_count(o.z_);
    return s % 2 == 0;
}

std::string PauliOperator::str() const { return phase_token(phase_k_) + " " + letters(); }

PauliOperator PauliOperator::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok, letters;
    int phase = 0;
    bool first = true;
    while (in >> tok) {
        if (first) {
            first = false;
            const int p = parse_phase_token(tok);
            if (p >= 0) {
                phase = p;
                continue;
            }
        }
        if (!letters.empty()) throw ParseError("unexpected token '" + tok + "' after Pauli string");
        letters = tok;
    }
    if (letters.empty()) throw ParseError("empty Pauli string");
    return from_letters(letters, phase);
}

PauliOperator jw_string(std::size_t mu, std::size_t modes) {
    if (mu == 0 || mu > 2 * modes) throw std::out_of_range("jw_string: index out of range");
    const std::size_t site = (mu + 1) / 2;
    BitVec z(modes), x(modes);
    for (std::size_t j = 1; j < site; ++j) z.set(j);
    x.set(site);
    if (mu % 2 == 0) z.set(site);  // Y carries both bits
    return PauliOperator(0, std::move(z), std::move(x));
}

PauliOperator majorana_to_pauli(const MajoranaOperator& op) {
    const std::size_t m = op.modes();
    PauliOperator out = PauliOperator::identity(m);
    for (std::size_t mu : op.support().indices()) out = out * jw_string(mu, m);
    return PauliOperator(out.phase_exponent() + op.phase_exponent(), out.zbits(), out.xbits());
}

MajoranaOperator pauli_to_majorana(const PauliOperator& op) {
    const std::size_t m = op.qubits();
    const auto [a, b] = basis_change_matrices(m);
    (void)a;
    const BitVec support = matvec(b, op.symplectic_coordinates());
    const PauliOperator back = majorana_to_pauli(MajoranaOperator(0, support));
    if (back.zbits() != op.zbits() || back.xbits() != op.xbits())
        throw std::logic_error("pauli_to_majorana: basis-change mismatch");
    return MajoranaOperator(op.phase_exponent() - back.phase_exponent(), support);
}

}  // namespace mjc
