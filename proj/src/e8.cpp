#include "e8.hpp"

#include <algorithm>
#include <bit>

namespace mjc {
namespace e8 {

namespace {

RootSystem build_roots() {
    RootSystem rs;
    rs.doubled.reserve(240);
    // 2(+-e_p +- e_q), p < q.
    for (int p = 0; p < 8; ++p)
        for (int q = p + 1; q < 8; ++q)
            for (int sp : {2, -2})
                for (int sq : {2, -2}) {
                    std::array<int, 8> v{};
                    v[static_cast<std::size_t>(p)] = sp;
                    v[static_cast<std::size_t>(q)] = sq;
                    rs.doubled.push_back(v);
                }
    // (+-1, ..., +-1) with an even number of minus signs.
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) % 2) continue;
        std::array<int, 8> v;
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        rs.doubled.push_back(v);
    }
    return rs;
}

}  // namespace

const RootSystem& roots() {
    static const RootSystem rs = build_roots();
    return rs;
}

std::array<Rational, 8> RootSystem::root(std::size_t s) const {
    const std::array<int, 8>& d = doubled.at(s);
    std::array<Rational, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = Rational(d[i], 2);
    return out;
}

std::ptrdiff_t RootSystem::find(const std::array<Rational, 8>& alpha) const {
    std::array<Rational, 8> twice;
    std::array<int, 8> key;
    for (std::size_t i = 0; i < 8; ++i) {
        twice[i] = alpha[i] * 2;
        if (denominator(twice[i]) != 1) return -1;
        const Integer n = numerator(twice[i]);
        if (n < -2 || n > 2) return -1;
        key[i] = static_cast<int>(n);
    }
    const auto it = std::find(doubled.begin(), doubled.end(), key);
    return it == doubled.end() ? -1 : it - doubled.begin();
}

namespace {

// Exponents of (e^2) realizing the invariant degrees {2,8,...,30}.
constexpr std::array<int, 8> kHalfDegrees = {1, 4, 6, 7, 9, 10, 12, 15};

// Accumulate sum_s (f_s)^{2p} over doubled evaluations f = 2 e; the final
// division by 2^{2p} restores the undoubled power sums in one exact step.
template <typename T>
void accumulate_powers(const T& f, std::array<T, 8>& sums) {
    const T s = f * f;
    const T s2 = s * s;
    const T s3 = s2 * s;
    const T s4 = s2 * s2;
    const T s6 = s4 * s2;
    const T s7 = s6 * s;
    const T s9 = s7 * s2;
    const T s10 = s9 * s;
    const T s12 = s10 * s2;
    const T s15 = s12 * s3;
    sums[0] += s;
    sums[1] += s4;
    sums[2] += s6;
    sums[3] += s7;
    sums[4] += s9;
    sums[5] += s10;
    sums[6] += s12;
    sums[7] += s15;
}

bool all_integer_real(const Amplitudes& psi) {
    for (const Scalar& a : psi)
        if (a.im != 0 || denominator(a.re) != 1) return false;
    return true;
}

}  // namespace

std::array<Scalar, 8> evaluate_invariants(const Amplitudes& psi) {
    const RootSystem& rs = roots();
    std::array<Scalar, 8> out;
    if (all_integer_real(psi)) {
        // Integer fast path: f = 2 e is an integer for every root.
        std::array<Integer, 8> num;
        for (std::size_t i = 0; i < 8; ++i) num[i] = numerator(psi[i].re);
        std::array<Integer, 8> sums{};
        for (const auto& d : rs.doubled) {
            Integer f = 0;
            for (std::size_t i = 0; i < 8; ++i)
                if (d[i]) f += d[i] * num[i];
            accumulate_powers(f, sums);
        }
        for (std::size_t k = 0; k < 8; ++k) {
            Integer den = Integer(1) << (2 * kHalfDegrees[k]);
            out[k] = Scalar(Rational(sums[k], den));
        }
        return out;
    }
    std::array<Scalar, 8> sums{};
    for (const auto& d : rs.doubled) {
        Scalar f;
        for (std::size_t i = 0; i < 8; ++i) {
            if (d[i] == 0) continue;
            Scalar t = psi[i];
            if (d[i] < 0) t = -t;
            if (d[i] == 2 || d[i] == -2) t += t;
            f += t;
        }
        accumulate_powers(f, sums);
    }
    for (std::size_t k = 0; k < 8; ++k) {
        const Rational den(Integer(1) << (2 * kHalfDegrees[k]), 1);
        out[k] = Scalar(sums[k].re / den, sums[k].im / den);
    }
    return out;
}

Amplitudes reflect_by_index(std::size_t s, const Amplitudes& psi) {
    const std::array<int, 8>& d = roots().doubled.at(s);
    // alpha . psi = (d . psi)/2; r(psi)_i = psi_i - (alpha.psi) d_i / 2.
    Scalar dot;
    for (std::size_t i = 0; i < 8; ++i)
        if (d[i]) {
            Scalar t = psi[i];
            if (d[i] < 0) t = -t;
            if (d[i] == 2 || d[i] == -2) t += t;
            dot += t;
        }
    Amplitudes out = psi;
    const Rational quarter(1, 4);
    for (std::size_t i = 0; i < 8; ++i) {
        if (!d[i]) continue;
        Scalar step(dot.re * quarter * d[i], dot.im * quarter * d[i]);
        out[i] -= step;
    }
    return out;
}

Amplitudes reflect(const std::array<Rational, 8>& alpha, const Amplitudes& psi) {
    const std::ptrdiff_t idx = roots().find(alpha);
    if (idx < 0) throw std::invalid_argument("reflect: vector is not an E8 root");
    return reflect_by_index(static_cast<std::size_t>(idx), psi);
}

std::array<std::array<Scalar, 8>, 8> invariant_jacobian(const Amplitudes& psi) {
    const RootSystem& rs = roots();
    // grad[k][i] = sum_s 2p e^{2p-1} alpha_i with e = f/2, alpha_i = d_i/2,
    // accumulated doubled and rescaled by 2^{2p} at the end.
    std::array<std::array<Scalar, 8>, 8> grad{};
    for (const auto& d : rs.doubled) {
        Scalar f;
        for (std::size_t i = 0; i < 8; ++i) {
            if (d[i] == 0) continue;
            Scalar t = psi[i];
            if (d[i] < 0) t = -t;
            if (d[i] == 2 || d[i] == -2) t += t;
            f += t;
        }
        const Scalar s = f * f;
        const Scalar s2 = s * s;
        const Scalar s3 = s2 * s;
        // f^{2p-1} for 2p-1 = 1,7,11,13,17,19,23,29.
        std::array<Scalar, 8> odd;
        odd[0] = f;
        odd[1] = f * s3;               // f^7
        odd[2] = odd[1] * s2;          // f^11
        odd[3] = odd[2] * s;           // f^13
        odd[4] = odd[3] * s2;          // f^17
        odd[5] = odd[4] * s;           // f^19
        odd[6] = odd[5] * s2;          // f^23
        odd[7] = odd[6] * s3;          // f^29
        for (std::size_t k = 0; k < 8; ++k) {
            for (std::size_t i = 0; i < 8; ++i) {
                if (!d[i]) continue;
                Scalar term = odd[k];
                term *= Scalar(Rational(kInvariantDegrees[k] * d[i]));
                grad[k][i] += term;
            }
        }
    }
    for (std::size_t k = 0; k < 8; ++k) {
        const Rational scale(1, Integer(1) << (2 * kHalfDegrees[k]));
        for (std::size_t i = 0; i < 8; ++i)
            grad[k][i] = Scalar(grad[k][i].re * scale, grad[k][i].im * scale);
    }
    return grad;
}

int jacobian_rank(const Amplitudes& psi) {
    std::array<std::array<Scalar, 8>, 8> m = invariant_jacobian(psi);
    int rank = 0;
    for (std::size_t col = 0; col < 8 && rank < 8; ++col) {
        std::size_t pivot = 8;
        for (std::size_t r = static_cast<std::size_t>(rank); r < 8; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == 8) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const Scalar inv = Scalar::one() / m[static_cast<std::size_t>(rank)][col];
        for (std::size_t c = col; c < 8; ++c) m[static_cast<std::size_t>(rank)][c] *= inv;
        for (std::size_t r = 0; r < 8; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][col].is_zero()) continue;
            const Scalar factor = m[r][col];
            for (std::size_t c = col; c < 8; ++c)
                m[r][c] -= factor * m[static_cast<std::size_t>(rank)][c];
        }
        ++rank;
    }
    return rank;
}

Amplitudes generic_probe_point() {
    // Powers of two: no signed combination of distinct powers of two can
    // vanish, so this point avoids every reflecting hyperplane (where the
    // Jacobian of the invariants degenerates), and the distinct entries keep
    // it off the permutation-symmetric locus.
    Amplitudes psi;
    for (std::size_t i = 0; i < 8; ++i) psi[i] = Scalar(Rational(Integer(1) << i));
    return psi;
}

CartanCheck cartan_commutativity_check(const std::vector<FockVector>& basis) {
    CartanCheck res;
    if (basis.empty()) throw std::invalid_argument("cartan check: empty basis");
    const std::size_t m = basis[0].modes();
    for (const FockVector& b : basis)
        if (b.modes() != m) throw std::invalid_argument("cartan check: mixed mode counts");
    const std::size_t dim = basis.size();
    // Plain orthogonality first (the weight-zero block).
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            if (a == b) continue;
            const Scalar v = inner(basis[a], basis[b]);
            ++res.checked;
            if (!v.is_zero()) {
                res.ok = false;
                res.nonzero.push_back("identity block " + std::to_string(a) + " " +
                                      std::to_string(b) + " = " + v.str());
            }
        }
    for (std::size_t mu = 1; mu <= 2 * m; ++mu) {
        for (std::size_t nu = mu + 1; nu <= 2 * m; ++nu) {
            const MajoranaOperator op =
                MajoranaOperator::single(m, mu) * MajoranaOperator::single(m, nu);
            std::vector<FockVector> images;
            images.reserve(dim);
            for (const FockVector& b : basis) images.push_back(apply_majorana(op, b));
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b) {
                    if (a == b) continue;
                    const Scalar v = inner(basis[a], images[b]);
                    ++res.checked;
                    if (!v.is_zero()) {
                        res.ok = false;
                        res.nonzero.push_back(std::to_string(mu) + " " + std::to_string(nu) + " " +
                                              std::to_string(a) + " " + std::to_string(b) + " = " +
                                              v.str());
                    }
                }
        }
    }
    return res;
}

}  // namespace e8
}  // namespace mjc
