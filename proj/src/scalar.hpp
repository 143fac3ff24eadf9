#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "common.hpp"

namespace mjc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact complex-rational value. Every amplitude, inner product and invariant
// in this library is a Gaussian rational; nothing is ever rounded.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long r) : re(r) {}  // NOLINT

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    // i^k for any integer k.
    static Scalar i_pow(int k);

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Scalar conj() const { return Scalar(re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    // Exact division; throws std::domain_error on zero divisor.
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Multiply by i^k without constructing a temporary Scalar.
    Scalar times_i_pow(int k) const;

    // Canonical text form: "0", "-3/2", "1*i", "1/2-1/2*i".
    std::string str() const;
    // Accepts the output of str() plus optional leading '+', bare "i"/"-i",
    // and whitespace-free compositions like "-1/2+3*i".
    static Scalar parse(std::string_view text);
};

std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);
// Decimal expansion truncated to `digits` fractional digits (deterministic).
std::string decimal_str(const Rational& r, unsigned digits);

}  // namespace mjc
