#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebcalc/spectra.hpp"

namespace reebcalc {

struct ResonanceTerm {
    std::string orbit;
    int sigma;           // +1 / -1
    Rational delta;      // mean index of the simple orbit
    Rational weight;     // 1 for even orbits, 1/2 for odd
    Rational contribution;  // weight * sigma / delta
};

// Exact evaluation of sum_even sigma/Delta + (1/2) sum_odd sigma/Delta
// against the expected 1/2.
struct ResonanceReport {
    Rational lhs;
    Rational expected;  // 1/2
    std::vector<ResonanceTerm> terms;
    std::vector<std::string> excluded;  // orbits with Delta <= 0, left out with a warning
    bool verdict;
    // Residual |lhs - 1/2|; verdict uses the tolerance when one is supplied
    // (decimal-imported data), otherwise exact equality.
    Rational residual;
};

ResonanceReport resonance_identity(const OrbitSystem& system,
                                   const std::optional<Rational>& tolerance = std::nullopt);

struct RatioRow {
    std::string orbit;
    Rational delta;
    Rational action;
    Rational ratio;  // delta / action
};

struct RatioReport {
    std::vector<RatioRow> rows;
    bool all_equal;
};

// Mean-index-to-action ratio of every simple orbit; for a perfect form on the
// standard sphere all ratios coincide.
RatioReport ratio_table(const OrbitSystem& system,
                        const std::optional<Rational>& tolerance = std::nullopt);

struct CountingRow {
    long long k;
    long long by_action;  // floor(k A(y)/A(x)) - 1
    long long by_index;   // floor((cz(y^k) - cz(x)) / cz(x))
    long long difference;
};

struct CountingReport {
    long long k_max;
    long long max_discrepancy;
    std::vector<CountingRow> rows;
};

// Two-way iterate count between x and y^k, by action and by index; for
// ratio-equal pairs the discrepancy stays bounded in k.
CountingReport counting_diagnostic(const SimpleOrbit& x, const SimpleOrbit& y, long long k_max);

struct OrderingViolation {
    long long degree_low;
    long long degree_high;
    Rational action_low;
    Rational action_high;
};

struct OrderingReport {
    bool strictly_increasing;
    std::vector<std::pair<long long, Rational>> actions_by_degree;
    std::optional<OrderingViolation> violation;
};

// Consistency check (not a derivation): on a sphere-perfect system the action
// must increase strictly with the degree. Requires the system to pass
// perfection_check against the standard sphere up to max_degree.
OrderingReport action_degree_ordering(const OrbitSystem& system, long long max_degree);

}  // namespace reebcalc
