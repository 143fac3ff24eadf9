#include "stab.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace mjc {

namespace {

std::string index_list(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// Row-reduced accumulation of Fock vectors, pivots = lowest occupation key.
class ScalarEchelon {
  public:
    bool add(FockVector v) {
        reduce(v);
        if (v.is_zero()) return false;
        const FockKey pivot = v.terms().begin()->first;
        v *= Scalar::one() / v.terms().begin()->second;
        for (auto& [p, row] : rows_) {
            const Scalar c = row.amplitude(pivot);
            if (!c.is_zero()) row -= c * v;
        }
        rows_.emplace_back(pivot, std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    void reduce(FockVector& v) const {
        for (const auto& [pivot, row] : rows_) {
            const Scalar c = v.amplitude(pivot);
            if (!c.is_zero()) v -= c * row;
        }
    }

    bool contains(const FockVector& v) const {
        FockVector r = v;
        reduce(r);
        return r.is_zero();
    }

    std::size_t rank() const { return rows_.size(); }
    std::vector<FockVector> basis() const {
        std::vector<FockVector> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }

  private:
    std::vector<std::pair<FockKey, FockVector>> rows_;
};

// Enumerates w-element subsets of {1..n} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t w, F&& fn) {
    if (w > n) return;
    std::vector<std::size_t> c(w);
    for (std::size_t i = 0; i < w; ++i) c[i] = i + 1;
    while (true) {
        if (!fn(c)) return;
        std::size_t i = w;
        while (i > 0 && c[i - 1] == n - w + i) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < w; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

FockVector primitive_scaled(const FockVector& v) {
    if (v.is_zero()) return v;
    Integer num_gcd = 0, den_lcm = 1;
    auto absorb = [&](const Rational& r) {
        if (r == 0) return;
        num_gcd = gcd(num_gcd, Integer(abs(numerator(r))));
        den_lcm = lcm(den_lcm, Integer(denominator(r)));
    };
    for (const auto& [k, a] : v.terms()) {
        absorb(a.re);
        absorb(a.im);
    }
    FockVector out = v;
    out *= Scalar(Rational(den_lcm, num_gcd));
    const Scalar lead = out.terms().begin()->second;
    if (lead.re < 0 || (lead.re == 0 && lead.im < 0)) out *= Scalar(-1);
    return out;
}

std::optional<Scalar> proportionality_factor(const FockVector& u, const FockVector& v) {
    if (v.is_zero()) return std::nullopt;
    if (u.is_zero()) return Scalar::zero();
    if (u.term_count() != v.term_count()) return std::nullopt;
    auto iu = u.terms().begin();
    auto iv = v.terms().begin();
    Scalar t = iu->second / iv->second;
    for (; iu != u.terms().end(); ++iu, ++iv) {
        if (iu->first != iv->first) return std::nullopt;
        if (iu->second != t * iv->second) return std::nullopt;
    }
    return t;
}

bool same_span(const std::vector<FockVector>& a, const std::vector<FockVector>& b) {
    ScalarEchelon ea, eb;
    for (const FockVector& v : a) ea.add(v);
    for (const FockVector& v : b) eb.add(v);
    if (ea.rank() != eb.rank()) return false;
    for (const FockVector& v : b)
        if (!ea.contains(v)) return false;
    return true;
}

SignedPermutation SignedPermutation::x_type(std::size_t dim, std::size_t flip_mask) {
    SignedPermutation p;
    for (std::size_t a = 0; a < dim; ++a) {
        p.targets.push_back(a ^ flip_mask);
        p.scalars.push_back(Scalar::one());
    }
    return p;
}

SignedPermutation SignedPermutation::z_type(std::size_t dim, std::size_t bit_mask) {
    SignedPermutation p;
    for (std::size_t a = 0; a < dim; ++a) {
        p.targets.push_back(a);
        const bool minus = std::popcount(a & bit_mask) % 2;
        p.scalars.push_back(minus ? Scalar(-1) : Scalar::one());
    }
    return p;
}

ValidationResult validate(std::size_t modes, std::vector<MajoranaOperator> gens) {
    ValidationResult res;
    res.modes = modes;
    if (modes == 0 || modes > kMaxModes) {
        res.violations.push_back({"mode-mismatch", "mode count must be in 1..62"});
        return res;
    }
    bool sizes_ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].modes() != modes) {
            sizes_ok = false;
            res.violations.push_back(
                {"mode-mismatch", "generator " + std::to_string(i + 1) + " acts on " +
                                      std::to_string(gens[i].majorana_modes()) +
                                      " Majorana modes, expected " + std::to_string(2 * modes)});
        }
    }
    if (!sizes_ok) return res;

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].commutes_with(gens[j]))
                res.violations.push_back({"not-commuting",
                                          "generators " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) + " anticommute"});

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].is_even())
            res.violations.push_back({"odd-weight", "generator " + std::to_string(i + 1) +
                                                        " has odd weight " +
                                                        std::to_string(gens[i].weight())});
        const MajoranaOperator sq = gens[i] * gens[i];
        if (!sq.is_identity())
            res.violations.push_back(
                {"square-not-identity", "generator " + std::to_string(i + 1) + " squares to " +
                                            phase_token(sq.phase_exponent())});
    }

    GF2Matrix supports;
    for (const MajoranaOperator& g : gens) supports.append_row(g.support());
    if (gens.empty()) supports = GF2Matrix(0, 2 * modes);

    for (const BitVec& dep : row_dependencies(supports)) {
        const std::vector<std::size_t> combo = dep.indices();
        MajoranaOperator prod = MajoranaOperator::identity(modes);
        for (std::size_t j : combo) prod = prod * gens[j - 1];
        res.violations.push_back({"dependent-generators",
                                  "generators " + index_list(combo) + " multiply to " +
                                      phase_token(prod.phase_exponent()) + " times identity"});
        if (prod.phase_exponent() != 0) {
            const bool direct = prod.phase_exponent() == 2;
            res.violations.push_back(
                {"contains-minus-one",
                 "product of generators " + index_list(combo) + " equals " +
                     phase_token(prod.phase_exponent()) +
                     (direct ? " times identity" : " times identity, whose square is -1")});
        }
    }

    if (res.violations.empty())
        res.code = StabilizerCode(modes, std::move(gens), std::move(supports));
    return res;
}

const std::vector<FockVector>& StabilizerCode::codespace() const {
    if (codespace_) return *codespace_;
    if (modes_ > 16)
        throw std::invalid_argument("codespace extraction is limited to M <= 16 modes");
    // All subset products of the generators; the projector is their sum / 2^g.
    std::vector<MajoranaOperator> products{MajoranaOperator::identity(modes_)};
    products.reserve(std::size_t(1) << gens_.size());
    for (const MajoranaOperator& g : gens_) {
        const std::size_t n = products.size();
        for (std::size_t i = 0; i < n; ++i) products.push_back(products[i] * g);
    }
    const std::size_t dim = std::size_t(1) << logical_qubits();
    ScalarEchelon ech;
    std::vector<FockVector> raw;
    for (FockKey key = 0; key < (FockKey(1) << modes_); ++key) {
        FockVector v(modes_);
        for (const MajoranaOperator& p : products) v += apply_majorana(p, FockVector::basis_state(modes_, key));
        if (v.is_zero()) continue;
        ech.add(std::move(v));
        if (ech.rank() == dim) break;
    }
    std::vector<FockVector> basis;
    for (const FockVector& row : ech.basis()) basis.push_back(primitive_scaled(row));
    codespace_ = std::move(basis);
    return *codespace_;
}

DistanceResult StabilizerCode::distance(std::size_t max_weight, unsigned jobs) const {
    const std::size_t n = majorana_modes();
    Echelon span(n, gens_.size());
    for (const MajoranaOperator& g : gens_) span.add(g.support());
    std::vector<BitVec> gsupp;
    for (const MajoranaOperator& g : gens_) gsupp.push_back(g.support());

    auto is_logical = [&](const std::vector<std::size_t>& combo) {
        const BitVec cand = BitVec::from_indices(n, combo);
        for (const BitVec& s : gsupp)
            if (symplectic_form(cand, s) != 0) return false;
        return !span.contains(cand);
    };

    for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
        if (jobs <= 1) {
            std::vector<std::size_t> hit;
            for_each_combination(n, w, [&](const std::vector<std::size_t>& c) {
                if (is_logical(c)) {
                    hit = c;
                    return false;
                }
                return true;
            });
            if (!hit.empty()) return {DistanceResult::Kind::Exact, w, hit};
        } else {
            // Partition by the first support element; each stripe keeps its
            // lexicographically first hit, stripes combine by lexicographic min.
            std::vector<std::vector<std::size_t>> hits(jobs);
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) {
                pool.emplace_back([&, t]() {
                    for (std::size_t first = t + 1; first + w - 1 <= n; first += jobs) {
                        if (!hits[t].empty()) return;
                        if (w == 1) {
                            if (is_logical({first})) hits[t] = {first};
                            continue;
                        }
                        for_each_combination(n - first, w - 1,
                                             [&](const std::vector<std::size_t>& rest) {
                                                 std::vector<std::size_t> c{first};
                                                 for (std::size_t r : rest) c.push_back(first + r);
                                                 if (is_logical(c)) {
                                                     hits[t] = c;
                                                     return false;
                                                 }
                                                 return true;
                                             });
                    }
                });
            }
            for (std::thread& th : pool) th.join();
            std::vector<std::size_t> best;
            for (const auto& h : hits)
                if (!h.empty() && (best.empty() || h < best)) best = h;
            if (!best.empty()) return {DistanceResult::Kind::Exact, w, best};
        }
    }
    if (logical_qubits() == 0) return {DistanceResult::Kind::NoLogicals, max_weight, {}};
    return {DistanceResult::Kind::GreaterThan, max_weight, {}};
}

Syndrome StabilizerCode::syndrome(const MajoranaOperator& error) const {
    if (error.modes() != modes_) throw std::invalid_argument("syndrome: mode mismatch");
    BitVec bits(gens_.size());
    for (std::size_t j = 0; j < gens_.size(); ++j)
        if (symplectic_form(error.support(), gens_[j].support())) bits.set(j + 1);
    return Syndrome{std::move(bits)};
}

bool StabilizerCode::in_stabilizer_span(const BitVec& support) const {
    return in_span(support, supports_).in_span;
}

bool StabilizerCode::centralizes(const MajoranaOperator& op) const {
    for (const MajoranaOperator& g : gens_)
        if (!op.commutes_with(g)) return false;
    return true;
}

std::vector<MajoranaOperator> StabilizerCode::centralizer_generators() const {
    const std::size_t n = majorana_modes();
    // <v,s> = sum_i v_i (|s| + s_i) is linear in v; stack one constraint row
    // per generator plus the all-ones row enforcing even weight.
    GF2Matrix constraints(0, n);
    for (const MajoranaOperator& g : gens_) {
        BitVec row(n);
        const bool parity = g.weight() % 2;
        for (std::size_t i = 1; i <= n; ++i) {
            const bool bit = parity != g.support().get(i);
            if (bit) row.set(i);
        }
        constraints.append_row(std::move(row));
    }
    BitVec ones(n);
    for (std::size_t i = 1; i <= n; ++i) ones.set(i);
    constraints.append_row(std::move(ones));

    std::vector<MajoranaOperator> out;
    for (BitVec& v : kernel_basis(constraints)) out.emplace_back(0, std::move(v));
    return out;
}

LogicalCheck StabilizerCode::verify_logical(const MajoranaOperator& op,
                                            const SignedPermutation& expected,
                                            const std::vector<FockVector>& basis) const {
    LogicalCheck check;
    check.commutes = centralizes(op);
    if (!check.commutes) check.deviations.push_back("operator anticommutes with a generator");
    check.outside_span = !in_stabilizer_span(op.support());
    if (!check.outside_span)
        check.deviations.push_back("support lies in the stabilizer span (not logical)");
    if (expected.targets.size() != basis.size() || expected.scalars.size() != basis.size())
        throw std::invalid_argument("verify_logical: expected action has wrong dimension");
    check.action_matches = true;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const FockVector image = apply_majorana(op, basis[a]);
        const FockVector want = expected.scalars[a] * basis[expected.targets[a]];
        if (image != want) {
            check.action_matches = false;
            std::string msg = "basis vector " + std::to_string(a) + " maps to ";
            const auto t = proportionality_factor(image, basis[expected.targets[a]]);
            if (t)
                msg += "(" + t->str() + ") * basis vector " + std::to_string(expected.targets[a]) +
                       ", expected scalar " + expected.scalars[a].str();
            else
                msg += "a vector outside the expected ray";
            check.deviations.push_back(msg);
        }
    }
    return check;
}

LogicalCheck StabilizerCode::verify_logical(const MajoranaOperator& op,
                                            const SignedPermutation& expected) const {
    return verify_logical(op, expected, codespace());
}

ErrorDetectionResult error_detection_check(const StabilizerCode& code,
                                           const std::vector<FockVector>& basis,
                                           std::size_t max_weight) {
    ErrorDetectionResult res;
    const std::size_t n = code.majorana_modes();
    const std::size_t dim = basis.size();
    // Gram matrix of the (orthogonal, unnormalized) basis.
    std::vector<Scalar> gram(dim);
    for (std::size_t a = 0; a < dim; ++a) gram[a] = inner(basis[a], basis[a]);

    for (std::size_t w = 1; w <= max_weight; ++w) {
        for_each_combination(n, w, [&](const std::vector<std::size_t>& combo) {
            ++res.checked;
            const MajoranaOperator e(0, BitVec::from_indices(n, combo));
            std::vector<FockVector> images;
            images.reserve(dim);
            for (const FockVector& b : basis) images.push_back(apply_majorana(e, b));
            // Block must equal lambda * Gram: off-diagonal zero, diagonal ratios equal.
            bool ok = true;
            std::optional<Scalar> lambda;
            for (std::size_t a = 0; a < dim && ok; ++a) {
                for (std::size_t b = 0; b < dim && ok; ++b) {
                    const Scalar m = inner(basis[a], images[b]);
                    if (a != b) {
                        if (!m.is_zero()) ok = false;
                    } else {
                        const Scalar ratio = m / gram[a];
                        if (!lambda)
                            lambda = ratio;
                        else if (!(*lambda == ratio))
                            ok = false;
                    }
                }
            }
            if (!ok) {
                res.ok = false;
                res.failures.push_back("support " + index_list(combo) +
                                       " has a non-scalar codespace block");
            }
            return true;
        });
    }
    return res;
}

}  // namespace mjc
