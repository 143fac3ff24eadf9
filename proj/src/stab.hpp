#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fock.hpp"

namespace mjc {

struct Violation {
    std::string kind;    // "mode-mismatch", "not-commuting", "odd-weight",
                         // "square-not-identity", "dependent-generators",
                         // "contains-minus-one"
    std::string detail;  // human-readable, names the offending pair/combination
};

struct DistanceResult {
    enum class Kind { Exact, GreaterThan, NoLogicals };
    Kind kind = Kind::GreaterThan;
    std::size_t value = 0;                // exact distance, or the probed budget
    std::vector<std::size_t> witness;     // minimal logical support (Exact only)

    bool exact() const { return kind == Kind::Exact; }
};

struct Syndrome {
    BitVec bits;  // one bit per generator; bit j = anticommutation with generator j
    std::string str() const { return bits.str(); }
};

// Expected action of a logical operator on a stored codespace basis:
// op|B_a> must equal scalars[a] * B[targets[a]] exactly.
struct SignedPermutation {
    std::vector<std::size_t> targets;
    std::vector<Scalar> scalars;

    static SignedPermutation x_type(std::size_t dim, std::size_t flip_mask);
    static SignedPermutation z_type(std::size_t dim, std::size_t bit_mask);
};

struct LogicalCheck {
    bool commutes = false;
    bool outside_span = false;
    bool action_matches = false;
    std::vector<std::string> deviations;
    bool ok() const { return commutes && outside_span && action_matches; }
};

class StabilizerCode;
struct ValidationResult;
ValidationResult validate(std::size_t modes, std::vector<MajoranaOperator> gens);

// A validated Majorana stabilizer code: pairwise-commuting even-weight
// generators squaring to +1 with independent supports (hence -1 is not in
// the generated group).
class StabilizerCode {
  public:
    std::size_t modes() const { return modes_; }                       // M
    std::size_t majorana_modes() const { return 2 * modes_; }          // 2M
    const std::vector<MajoranaOperator>& generators() const { return gens_; }
    const GF2Matrix& support_matrix() const { return supports_; }
    std::size_t logical_qubits() const { return modes_ - gens_.size(); }  // k

    // Exact projector-extracted basis: (prod (1+g)/2) applied to computational
    // basis kets in lexicographic order, reduced to a maximal independent set
    // and rescaled to primitive integer amplitudes. Computed once, cached.
    const std::vector<FockVector>& codespace() const;

    // Exhaustive support enumeration by increasing weight. A support is
    // logical iff it commutes with every generator and lies outside the GF(2)
    // span of the generator supports. Phases are irrelevant here: operators
    // over a spanned support act as +-1 on the codespace either way.
    DistanceResult distance(std::size_t max_weight, unsigned jobs = 1) const;

    Syndrome syndrome(const MajoranaOperator& error) const;

    bool in_stabilizer_span(const BitVec& support) const;
    bool centralizes(const MajoranaOperator& op) const;

    // Basis of the symplectic-orthogonal complement of the generator supports
    // within the even-weight sector, as +1-phase standard-ordered operators.
    std::vector<MajoranaOperator> centralizer_generators() const;

    LogicalCheck verify_logical(const MajoranaOperator& op, const SignedPermutation& expected,
                                const std::vector<FockVector>& basis) const;
    LogicalCheck verify_logical(const MajoranaOperator& op,
                                const SignedPermutation& expected) const;

  private:
    friend struct ValidationResult;
    friend ValidationResult validate(std::size_t modes, std::vector<MajoranaOperator> gens);
    StabilizerCode(std::size_t modes, std::vector<MajoranaOperator> gens, GF2Matrix supports)
        : modes_(modes), gens_(std::move(gens)), supports_(std::move(supports)) {}

    std::size_t modes_;
    std::vector<MajoranaOperator> gens_;
    GF2Matrix supports_;
    mutable std::optional<std::vector<FockVector>> codespace_;
};

// Checks pairwise commutation, even weight, squares, support independence
// and -1-freeness (every GF(2) dependency among supports is multiplied out
// and must give exactly +1). All violations are reported, none is fatal to
// the remaining checks.
struct ValidationResult {
    std::size_t modes = 0;
    std::vector<Violation> violations;
    std::optional<StabilizerCode> code;  // engaged iff violations is empty
    bool valid() const { return violations.empty(); }
};

// Error-detection check at desk scale: for every support of weight 1..max_weight
// the codespace block <B_a| E |B_b> must be an exact scalar multiple of the
// Gram matrix of the basis (zero counts).
struct ErrorDetectionResult {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};
ErrorDetectionResult error_detection_check(const StabilizerCode& code,
                                           const std::vector<FockVector>& basis,
                                           std::size_t max_weight);

// If u == t * v for a single exact scalar t (v nonzero), returns t.
std::optional<Scalar> proportionality_factor(const FockVector& u, const FockVector& v);

// Exact span equality of two families of Fock vectors.
bool same_span(const std::vector<FockVector>& a, const std::vector<FockVector>& b);

// Rescales to primitive form: amplitudes become Gaussian integers with unit
// content, and the leading (lowest-key) amplitude is made positive-real or
// positive-imaginary by an overall sign.
FockVector primitive_scaled(const FockVector& v);

}  // namespace mjc
