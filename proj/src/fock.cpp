#include "fock.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace mjc {

std::string key_str(FockKey key, std::size_t modes) {
    std::string s(modes, '0');
    for (std::size_t i = 1; i <= modes; ++i)
        if (key_bit(key, i, modes)) s[i - 1] = '1';
    return s;
}

FockKey key_from_str(std::string_view bits, std::size_t modes) {
    if (bits.size() != modes) throw ParseError("occupation string length mismatch");
    FockKey k = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            k |= FockKey(1) << (modes - i - 1);
        else if (bits[i] != '0')
            throw ParseError("occupation strings are binary");
    }
    return k;
}

FockVector::FockVector(std::size_t modes) : modes_(modes) {
    if (modes == 0 || modes > kMaxModes)
        throw std::invalid_argument("FockVector: mode count must be in 1..62");
}

FockVector FockVector::basis_state(std::size_t modes, FockKey key) {
    FockVector v(modes);
    v.add_term(key, Scalar::one());
    return v;
}

Scalar FockVector::amplitude(FockKey key) const {
    auto it = amps_.find(key);
    return it == amps_.end() ? Scalar::zero() : it->second;
}

FockVector& FockVector::add_term(FockKey key, const Scalar& amp) {
    if (amp.is_zero()) return *this;
    if (modes_ < kMaxModes && key >= (FockKey(1) << modes_))
        throw std::out_of_range("FockVector: key exceeds mode count");
    auto [it, inserted] = amps_.emplace(key, amp);
    if (!inserted) {
        it->second += amp;
        if (it->second.is_zero()) amps_.erase(it);
    }
    return *this;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (modes_ != o.modes_) throw std::invalid_argument("FockVector: mode mismatch");
    for (const auto& [k, a] : o.amps_) add_term(k, a);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    if (modes_ != o.modes_) throw std::invalid_argument("FockVector: mode mismatch");
    for (const auto& [k, a] : o.amps_) add_term(k, -a);
    return *this;
}

FockVector& FockVector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        amps_.clear();
        return *this;
    }
    for (auto& [k, a] : amps_) a *= s;
    return *this;
}

std::string FockVector::str() const {
    if (amps_.empty()) return "0";
    std::string out;
    for (const auto& [k, a] : amps_) {
        if (!out.empty()) out += "  ";
        std::string s = a.str();
        if (s[0] != '-') s = "+" + s;
        out += s + " |" + key_str(k, modes_) + ">";
    }
    return out;
}

FockVector create(std::size_t mode, const FockVector& v) {
    if (mode == 0 || mode > v.modes()) throw std::out_of_range("create: mode index out of range");
    FockVector out(v.modes());
    for (const auto& [k, a] : v.terms()) {
        if (key_bit(k, mode, v.modes())) continue;
        const int sign = key_occupied_below(k, mode, v.modes()) % 2 ? 2 : 0;
        out.add_term(key_toggle(k, mode, v.modes()), a.times_i_pow(sign));
    }
    return out;
}

FockVector annihilate(std::size_t mode, const FockVector& v) {
    if (mode == 0 || mode > v.modes())
        throw std::out_of_range("annihilate: mode index out of range");
    FockVector out(v.modes());
    for (const auto& [k, a] : v.terms()) {
        if (!key_bit(k, mode, v.modes())) continue;
        const int sign = key_occupied_below(k, mode, v.modes()) % 2 ? 2 : 0;
        out.add_term(key_toggle(k, mode, v.modes()), a.times_i_pow(sign));
    }
    return out;
}

FockVector apply_majorana(const MajoranaOperator& op, const FockVector& v) {
    if (op.modes() != v.modes())
        throw std::invalid_argument("apply_majorana: mode-count mismatch");
    const std::size_t m = v.modes();
    const std::vector<std::size_t> idx = op.support().indices();
    FockVector cur = v;
    // Rightmost factor acts first; each c_u maps a basis ket to i^g times a ket.
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        const std::size_t mu = *it;
        const std::size_t site = (mu + 1) / 2;
        FockVector next(m);
        for (const auto& [k, a] : cur.terms()) {
            const bool occ = key_bit(k, site, m);
            int g = key_occupied_below(k, site, m) % 2 ? 2 : 0;
            if (mu % 2 == 0) g += occ ? 3 : 1;  // c_{2I} = i(p_I - n_I)
            next.add_term(key_toggle(k, site, m), a.times_i_pow(g));
        }
        cur = std::move(next);
    }
    cur *= Scalar::i_pow(op.phase_exponent());
    return cur;
}

FockVector apply_pauli(const PauliOperator& op, const FockVector& v) {
    if (op.qubits() != v.modes()) throw std::invalid_argument("apply_pauli: size mismatch");
    const std::size_t m = v.modes();
    FockVector out(m);
    for (const auto& [k, a] : v.terms()) {
        FockKey key = k;
        int g = op.phase_exponent();
        for (std::size_t i = 1; i <= m; ++i) {
            switch (op.letter(i)) {
                case 0: break;
                case 1:  // X
                    key = key_toggle(key, i, m);
                    break;
                case 2:  // Z
                    if (key_bit(key, i, m)) g += 2;
                    break;
                default:  // Y: |0> -> i|1>, |1> -> -i|0>
                    g += key_bit(key, i, m) ? 3 : 1;
                    key = key_toggle(key, i, m);
                    break;
            }
        }
        out.add_term(key, a.times_i_pow(g));
    }
    return out;
}

MajoranaOperator chirality(std::size_t modes) {
    BitVec full(2 * modes);
    for (std::size_t mu = 1; mu <= 2 * modes; ++mu) full.set(mu);
    // (-i)^M = i^{3M}
    return MajoranaOperator(static_cast<int>((3 * modes) % 4), std::move(full));
}

Scalar inner(const FockVector& u, const FockVector& v) {
    if (u.modes() != v.modes()) throw std::invalid_argument("inner: mode mismatch");
    Scalar s;
    const auto& a = u.terms();
    const auto& b = v.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            s += ia->second.conj() * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

std::map<std::size_t, FockVector> particle_sectors(const FockVector& v) {
    std::map<std::size_t, FockVector> out;
    for (const auto& [k, a] : v.terms()) {
        const auto w = static_cast<std::size_t>(std::popcount(k));
        auto it = out.find(w);
        if (it == out.end()) it = out.emplace(w, FockVector(v.modes())).first;
        it->second.add_term(k, a);
    }
    return out;
}

ChiralitySector chirality_sector(const FockVector& v) {
    if (v.is_zero()) return ChiralitySector::Zero;
    bool even = false, odd = false;
    for (const auto& [k, a] : v.terms()) {
        (void)a;
        (std::popcount(k) % 2 == 0 ? even : odd) = true;
    }
    if (even && odd) return ChiralitySector::Mixed;
    return even ? ChiralitySector::Plus : ChiralitySector::Minus;
}

std::string chirality_sector_name(ChiralitySector s) {
    switch (s) {
        case ChiralitySector::Zero: return "zero";
        case ChiralitySector::Plus: return "+";
        case ChiralitySector::Minus: return "-";
        default: return "mixed";
    }
}

std::string to_state_text(const FockVector& v) {
    std::ostringstream out;
    for (const auto& [k, a] : v.terms()) {
        std::string s = a.str();
        if (s[0] != '-') s = "+" + s;
        out << s << " |" << key_str(k, v.modes()) << ">\n";
    }
    return out.str();
}

FockVector parse_state_text(std::string_view text, std::size_t modes) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::size_t m = modes;
    std::vector<std::pair<FockKey, Scalar>> terms;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
            sv.remove_prefix(1);
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back())))
            sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        const std::size_t bar = sv.find('|');
        if (bar == std::string_view::npos) throw ParseError("missing '|bits>' term", lineno);
        std::string_view amp_part = sv.substr(0, bar);
        std::string_view ket = sv.substr(bar + 1);
        // Strip closing ket: ASCII '>' or UTF-8 U+27E9.
        if (!ket.empty() && ket.back() == '>')
            ket.remove_suffix(1);
        else if (ket.size() >= 3 && static_cast<unsigned char>(ket[ket.size() - 3]) == 0xe2)
            ket.remove_suffix(3);
        while (!ket.empty() && std::isspace(static_cast<unsigned char>(ket.back())))
            ket.remove_suffix(1);
        if (ket.empty()) throw ParseError("empty occupation string", lineno);
        for (char c : ket)
            if (c != '0' && c != '1') throw ParseError("occupation strings are binary", lineno);
        Scalar amp;
        try {
            amp = Scalar::parse(amp_part);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
        if (m == 0) m = ket.size();
        if (ket.size() != m) throw ParseError("inconsistent occupation string length", lineno);
        terms.emplace_back(key_from_str(ket, m), amp);
    }
    if (m == 0) throw ParseError("state text holds no terms and no mode count was given");
    FockVector v(m);
    for (const auto& [k, a] : terms) v.add_term(k, a);
    return v;
}

}  // namespace mjc
