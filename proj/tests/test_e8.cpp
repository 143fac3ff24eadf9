#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "codes.hpp"
#include "e8.hpp"

using namespace mjc;
using e8::Amplitudes;

namespace {

// Test-side oracle: plain rational evaluation of the power sums straight
// from the definition, independent of the production evaluation path.
std::array<Scalar, 8> oracle_invariants(const Amplitudes& psi) {
    std::array<Scalar, 8> out{};
    const auto& rs = e8::roots();
    for (std::size_t s = 0; s < rs.size(); ++s) {
        const auto alpha = rs.root(s);
        Scalar e;
        for (std::size_t i = 0; i < 8; ++i) e += Scalar(alpha[i]) * psi[i];
        for (std::size_t k = 0; k < 8; ++k) {
            Scalar power = Scalar::one();
            for (int t = 0; t < e8::kInvariantDegrees[k]; ++t) power *= e;
            out[k] += power;
        }
    }
    return out;
}

Amplitudes zeros() {
    Amplitudes a;
    a.fill(Scalar(0));
    return a;
}

Amplitudes random_rational_point(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Amplitudes a;
    for (auto& v : a) v = Scalar(Rational(num(rng), den(rng)));
    return a;
}

Scalar norm_sq(const Amplitudes& a) {
    Scalar s;
    for (const Scalar& v : a) s += v * v;
    return s;
}

}  // namespace

TEST_CASE("the root system has the 112 + 128 split") {
    const auto& rs = e8::roots();
    CHECK(rs.size() == 240);
    std::size_t integer = 0, half = 0;
    std::set<std::array<int, 8>> distinct;
    for (const auto& d : rs.doubled) {
        distinct.insert(d);
        bool is_half = true;
        for (int v : d)
            if (v != 1 && v != -1) is_half = false;
        (is_half ? half : integer) += 1;
    }
    CHECK(distinct.size() == 240);
    CHECK(integer == 112);
    CHECK(half == 128);
}

TEST_CASE("membership: e1 - e2 is a root, integer vectors with three entries are not") {
    std::array<Rational, 8> v{};
    v[0] = 1;
    v[1] = -1;
    CHECK(e8::roots().find(v) >= 0);
    std::array<Rational, 8> w{};
    w[0] = 1;
    w[1] = 1;
    w[2] = 1;
    CHECK(e8::roots().find(w) == -1);
}

TEST_CASE("half-integer roots carry an even number of minus signs") {
    for (const auto& d : e8::roots().doubled) {
        bool is_half = true;
        int minus = 0;
        for (int x : d) {
            if (x != 1 && x != -1) is_half = false;
            if (x < 0) ++minus;
        }
        if (is_half) CHECK(minus % 2 == 0);
    }
}

TEST_CASE("all roots have squared length two and the set is negation-closed") {
    const auto& rs = e8::roots();
    for (const auto& d : rs.doubled) {
        int sq = 0;
        for (int x : d) sq += x * x;
        CHECK(sq == 8);  // doubled coordinates: (2 alpha).(2 alpha) = 8
        std::array<int, 8> neg;
        for (std::size_t i = 0; i < 8; ++i) neg[i] = -d[i];
        CHECK(std::find(rs.doubled.begin(), rs.doubled.end(), neg) != rs.doubled.end());
    }
}

TEST_CASE("pairwise root inner products lie in the E8 lattice range") {
    const auto& rs = e8::roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = a + 1; b < rs.size(); ++b) {
            int dot = 0;
            for (std::size_t i = 0; i < 8; ++i) dot += rs.doubled[a][i] * rs.doubled[b][i];
            // alpha.beta = dot/4 must be -2,-1,0,1 for distinct roots.
            CHECK((dot == -8 || dot == -4 || dot == 0 || dot == 4));
        }
}

TEST_CASE("invariants vanish at the origin") {
    for (const Scalar& v : e8::evaluate_invariants(zeros())) CHECK(v.is_zero());
}

TEST_CASE("first invariant at a coordinate vector is sixty") {
    Amplitudes a = zeros();
    a[0] = Scalar(1);
    const auto vals = e8::evaluate_invariants(a);
    CHECK(vals[0] == Scalar(60));
    // Cross-checked against the independent rational oracle.
    const auto expect = oracle_invariants(a);
    for (std::size_t k = 0; k < 8; ++k) CHECK(vals[k] == expect[k]);
}

TEST_CASE("the quadratic invariant equals sixty times the squared norm") {
    std::mt19937 rng(484811);
    for (int trial = 0; trial < 20; ++trial) {
        const Amplitudes psi = random_rational_point(rng);
        CHECK(e8::evaluate_invariants(psi)[0] == Scalar(60) * norm_sq(psi));
    }
}

TEST_CASE("integer fast path agrees with the rational oracle on all invariants") {
    const Amplitudes psi = e8::generic_probe_point();
    const auto fast = e8::evaluate_invariants(psi);
    const auto slow = oracle_invariants(psi);
    for (std::size_t k = 0; k < 8; ++k) CHECK(fast[k] == slow[k]);
}

TEST_CASE("rational path agrees with the oracle at non-integer points") {
    std::mt19937 rng(9911);
    for (int trial = 0; trial < 3; ++trial) {
        const Amplitudes psi = random_rational_point(rng);
        const auto got = e8::evaluate_invariants(psi);
        const auto expect = oracle_invariants(psi);
        for (std::size_t k = 0; k < 8; ++k) CHECK(got[k] == expect[k]);
    }
}

TEST_CASE("invariants are homogeneous of their degree") {
    std::mt19937 rng(5656);
    const Amplitudes psi = random_rational_point(rng);
    const Rational t(3, 2);
    Amplitudes scaled;
    for (std::size_t i = 0; i < 8; ++i) scaled[i] = Scalar(t) * psi[i];
    const auto base = e8::evaluate_invariants(psi);
    const auto got = e8::evaluate_invariants(scaled);
    for (std::size_t k = 0; k < 8; ++k) {
        Rational factor = 1;
        for (int d = 0; d < e8::kInvariantDegrees[k]; ++d) factor *= t;
        CHECK(got[k] == Scalar(factor) * base[k]);
    }
}

TEST_CASE("reflections: involution, root negation, root-set permutation") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<std::size_t> pick(0, 239);
    const Amplitudes psi = random_rational_point(rng);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t s = pick(rng);
        const auto alpha = e8::roots().root(s);
        // r(alpha) = -alpha
        Amplitudes alpha_amp;
        for (std::size_t i = 0; i < 8; ++i) alpha_amp[i] = Scalar(alpha[i]);
        const Amplitudes neg = e8::reflect_by_index(s, alpha_amp);
        for (std::size_t i = 0; i < 8; ++i) CHECK(neg[i] == -alpha_amp[i]);
        // involution
        const Amplitudes twice = e8::reflect_by_index(s, e8::reflect_by_index(s, psi));
        for (std::size_t i = 0; i < 8; ++i) CHECK(twice[i] == psi[i]);
        // the reflection permutes the root set
        for (std::size_t r = 0; r < 240; ++r) {
            Amplitudes root_amp;
            const auto beta = e8::roots().root(r);
            for (std::size_t i = 0; i < 8; ++i) root_amp[i] = Scalar(beta[i]);
            const Amplitudes image = e8::reflect_by_index(s, root_amp);
            std::array<Rational, 8> image_rat;
            for (std::size_t i = 0; i < 8; ++i) {
                CHECK(image[i].is_real());
                image_rat[i] = image[i].re;
            }
            CHECK(e8::roots().find(image_rat) >= 0);
        }
    }
    CHECK_THROWS_AS(e8::reflect(std::array<Rational, 8>{}, psi), std::invalid_argument);
}

TEST_CASE("invariants are unchanged by sampled root reflections") {
    std::mt19937 rng(654321);
    std::uniform_int_distribution<std::size_t> pick(0, 239);
    const Amplitudes psi = e8::generic_probe_point();
    const auto base = e8::evaluate_invariants(psi);
    for (int trial = 0; trial < 20; ++trial) {
        const auto reflected = e8::evaluate_invariants(e8::reflect_by_index(pick(rng), psi));
        for (std::size_t k = 0; k < 8; ++k) CHECK(reflected[k] == base[k]);
    }
}

TEST_CASE("invariants are unchanged by coordinate swaps and even sign flips") {
    std::mt19937 rng(20202);
    const Amplitudes psi = random_rational_point(rng);
    const auto base = e8::evaluate_invariants(psi);
    // A sample of transpositions (the full symmetric group runs in the
    // verification suite).
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            Amplitudes swapped = psi;
            std::swap(swapped[i], swapped[j]);
            const auto got = e8::evaluate_invariants(swapped);
            for (std::size_t k = 0; k < 8; ++k) CHECK(got[k] == base[k]);
        }
    }
    Amplitudes flipped = psi;
    flipped[1] = -flipped[1];
    flipped[6] = -flipped[6];
    const auto got = e8::evaluate_invariants(flipped);
    for (std::size_t k = 0; k < 8; ++k) CHECK(got[k] == base[k]);
}

TEST_CASE("jacobian vanishes at the origin and has full rank at the probe point") {
    CHECK(e8::jacobian_rank(zeros()) == 0);
    CHECK(e8::jacobian_rank(e8::generic_probe_point()) == 8);
}

TEST_CASE("gradient of the quadratic invariant at a coordinate vector") {
    Amplitudes a = zeros();
    a[0] = Scalar(1);
    const auto jac = e8::invariant_jacobian(a);
    CHECK(jac[0][0] == Scalar(120));
    for (std::size_t i = 1; i < 8; ++i) CHECK(jac[0][i].is_zero());
}

TEST_CASE("cartan check passes on the glued basis") {
    const NamedCode nc = glued_code();
    const e8::CartanCheck res = e8::cartan_commutativity_check(nc.basis);
    CHECK(res.ok);
    CHECK(res.nonzero.empty());
    // 8*7 ordered pairs for the identity block plus 120 mode pairs each.
    CHECK(res.checked == 56 + 120 * 56);
}

TEST_CASE("cartan check fails on a non-code pair") {
    std::vector<FockVector> bad;
    bad.push_back(FockVector::vacuum(8));
    bad.push_back(create(2, create(1, FockVector::vacuum(8))));
    const e8::CartanCheck res = e8::cartan_commutativity_check(bad);
    CHECK_FALSE(res.ok);
    bool found_1_3 = false;
    for (const std::string& entry : res.nonzero)
        if (entry.rfind("1 3 ", 0) == 0) found_1_3 = true;
    CHECK(found_1_3);
}
