#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reebcalc/rational.hpp"

namespace reebcalc {

// Abstract orbit-type entry for the standard contact S^3: the classifier
// needs only the type and the mean index. Elliptic entries carry a rational
// witness for an (always irrational) mean index; hyperbolic entries carry the
// integer Conley-Zehnder index mu, which equals the mean index.
class S3Entry {
public:
    enum class Type { Elliptic, NegHyperbolic, PosHyperbolic };

    static S3Entry elliptic(Rational delta, bool declared_irrational = false);
    static S3Entry neg_hyperbolic(long long mu);   // odd mu >= 1
    static S3Entry pos_hyperbolic(long long mu);   // even mu >= 2

    Type type() const noexcept { return type_; }
    const Rational& delta() const noexcept { return delta_; }
    bool declared_irrational() const noexcept { return declared_irrational_; }
    long long mu() const;  // hyperbolic only

    std::string describe() const;

private:
    S3Entry(Type t, Rational delta, bool irr, long long mu)
        : type_(t), delta_(std::move(delta)), declared_irrational_(irr), mu_(mu) {}

    Type type_;
    Rational delta_;
    bool declared_irrational_;
    long long mu_;
};

// assume_perfect: the configuration is the simple-orbit set of a perfect
// form. assume_exact_orbit_set: it is the exact simple-orbit set of some
// non-degenerate form (perfectness not assumed); only the resonance identity
// and the standalone two-orbit argument apply.
enum class S3Mode { AssumePerfect, AssumeExactOrbitSet };

struct S3Configuration {
    S3Mode mode;
    std::vector<S3Entry> entries;
};

enum class RuleStatus { Passed, Fired, Skipped, Inconclusive };
enum class FiringBasis { Proved, WitnessFound, GuaranteedByDensity };

struct RuleOutcome {
    RuleStatus status;
    std::optional<FiringBasis> basis;  // set when status == Fired
    std::string note;
};

struct TraceEntry {
    std::string rule;  // "R1".."R7"
    std::string citation;
    RuleStatus status;
    std::optional<FiringBasis> basis;
    std::string note;
};

struct S3Verdict {
    bool consistent;
    std::vector<TraceEntry> trace;
    long long search_bound;
};

inline constexpr long long kDefaultS3SearchBound = 10000;

// Rules, individually callable for testing; ids and order match classify().
RuleOutcome rule_no_positive_hyperbolic(const S3Configuration& config);                        // R1
RuleOutcome rule_at_most_two_elliptic(const S3Configuration& config);                          // R2
RuleOutcome rule_at_most_one_negative_hyperbolic(const S3Configuration& config);               // R3
RuleOutcome rule_at_least_two_orbits(const S3Configuration& config);                           // R4
RuleOutcome rule_no_mixed_elliptic_negative_hyperbolic(const S3Configuration& config,
                                                       long long search_bound);                // R5
RuleOutcome rule_resonance(const S3Configuration& config);                                     // R6
RuleOutcome rule_two_hyperbolic_impossible(const S3Configuration& config);                     // R7

// Applies R1..R7 in order, short-circuiting on the first firing rule; the
// trace records every rule evaluated.
S3Verdict classify(const S3Configuration& config, long long search_bound = kDefaultS3SearchBound);

struct WitnessEllipsoid {
    Rational a1;      // always 1
    Rational a2;      // 2 / (delta1 - 2)
    Rational delta2;  // 2*delta1 / (delta1 - 2)
};

// Ellipsoid semiaxes realizing a given first mean index under the resonance
// identity 1/delta1 + 1/delta2 = 1/2; needs delta1 > 2.
WitnessEllipsoid witness_ellipsoid(const Rational& delta1);

struct S3Census {
    long long total;
    std::vector<S3Configuration> consistent;
    std::map<std::string, long long> ruled_out_by;  // firing rule -> count
};

// Exhaustive desk-scale sweep: classify every configuration with up to
// max_entries entries, hyperbolic mu <= mu_max, and elliptic witnesses p/q
// with q <= delta_denominator_max and value <= mu_max (declared irrational).
// Guarded: max_entries <= 3, mu_max <= 15, delta_denominator_max <= 12.
S3Census enumerate_small_configs(S3Mode mode, int max_entries, long long mu_max,
                                 long long delta_denominator_max,
                                 long long search_bound = kDefaultS3SearchBound);

}  // namespace reebcalc
