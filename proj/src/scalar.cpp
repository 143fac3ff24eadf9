#include "scalar.hpp"

#include <cctype>

namespace mjc {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

Scalar Scalar::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Scalar(1);
        case 1: return Scalar(Rational(0), Rational(1));
        case 2: return Scalar(-1);
        default: return Scalar(Rational(0), Rational(-1));
    }
}

Scalar Scalar::times_i_pow(int k) const {
    switch (((k % 4) + 4) % 4) {
        case 0: return *this;
        case 1: return Scalar(-im, re);
        case 2: return Scalar(-re, -im);
        default: return Scalar(im, -re);
    }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero scalar");
    return Scalar((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

std::string rational_str(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    const std::size_t slash = s.find('/', pos);
    const std::string num_part = s.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    if (num_part.empty()) throw ParseError("malformed rational '" + s + "'");
    for (char c : num_part)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed rational '" + s + "'");
    Integer num(num_part);
    Integer den = 1;
    if (slash != std::string::npos) {
        const std::string den_part = s.substr(slash + 1);
        if (den_part.empty()) throw ParseError("malformed rational '" + s + "'");
        for (char c : den_part)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("malformed rational '" + s + "'");
        den = Integer(den_part);
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

std::string Scalar::str() const {
    if (im == 0) return rational_str(re);
    std::string imag = rational_str(im) + "*i";
    if (re == 0) return imag;
    if (im > 0) return rational_str(re) + "+" + imag;
    return rational_str(re) + imag;  // '-' carried by the numerator
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    Scalar out;
    std::size_t pos = 0;
    bool saw_real = false, saw_imag = false;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string part = s.substr(pos, end - pos);
        if (part.empty()) throw ParseError("malformed scalar '" + std::string(text) + "'");
        bool imag = false;
        if (part == "i") {
            imag = true;
            part = "1";
        } else if (part.size() >= 2 && part.compare(part.size() - 2, 2, "*i") == 0) {
            imag = true;
            part = part.substr(0, part.size() - 2);
        } else if (part.back() == 'i') {
            // tolerate "2i" as shorthand for "2*i"
            imag = true;
            part = part.substr(0, part.size() - 1);
        }
        Rational value = parse_rational(part);
        if (sign < 0) value = -value;
        if (imag) {
            if (saw_imag) throw ParseError("duplicate imaginary part in '" + std::string(text) + "'");
            out.im = value;
            saw_imag = true;
        } else {
            if (saw_real) throw ParseError("duplicate real part in '" + std::string(text) + "'");
            out.re = value;
            saw_real = true;
        }
        pos = end;
    }
    return out;
}

std::string decimal_str(const Rational& r, unsigned digits) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    Integer whole = num / den;
    Integer rem = num % den;
    std::string frac;
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        frac += Integer(rem / den).str();
        rem %= den;
    }
    return sign + whole.str() + "." + frac;
}

}  // namespace mjc
