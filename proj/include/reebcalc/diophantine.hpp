#pragma once

#include <string>
#include <vector>

#include "reebcalc/spectra.hpp"

namespace reebcalc {

enum class Parity { Any, AllOdd };

// Simultaneous clustering query: find k_i >= 1 (odd when parity = AllOdd)
// with all Delta_i * k_i within epsilon of each other. `bound` is the search
// horizon: every k_i <= bound for parity Any, and the scan variable
// m = (k_1 - 1)/2 runs to bound for AllOdd (so k_i <= 2*bound + 1).
struct ClusterQuery {
    std::vector<Rational> deltas;
    Rational epsilon;
    long long bound;
    Parity parity = Parity::Any;
};

struct ClusterSolution {
    std::vector<long long> k;  // in the query's original indexing
    Rational spread;           // max_{i,j} |Delta_i k_i - Delta_j k_j|, < epsilon
    bool exact_path;           // solved by the rational-lcm fast path (spread 0)
};

// Validates the ClusterSolution invariants against its query; throws on violation.
void check_solution(const ClusterQuery& query, const ClusterSolution& solution);

// Constructive replacement for the Minkowski step: exact rational fast path
// (common multiple of the deltas) when it fits the box, otherwise a scan over
// k_1 with nearest-integer rounding of the remaining coordinates.
ClusterSolution cluster(const ClusterQuery& query);

// Odd-iterate variant (Kronecker step): k_i = 2 m_i + 1, scanning m and
// rounding to the nearest odd multiplier. Detects pairwise parity
// obstructions for rational deltas and reports them as provably infeasible.
ClusterSolution odd_cluster(const ClusterQuery& query);

// Exhaustive search over the full box for oracle testing; returns the
// minimal-spread solution (ties lexicographically smallest) and throws
// InfeasibleWithinBoundError when even the box minimum misses epsilon.
// Guarded: r <= 4 and bound <= 200.
ClusterSolution brute_oracle(const ClusterQuery& query);

struct WindowReport {
    long long degree_min;
    long long degree_max;
    Rational window;  // allowed length
    bool fits;
};

// Degrees of the iterates x_i^{k_i} must fit in an interval of length
// 2(n-1) + epsilon. Throws on degenerate or bad iterates.
WindowReport verify_window(const OrbitSystem& system, const std::vector<long long>& k,
                           const Rational& epsilon);

struct AbstractWindowReport {
    Rational span;  // max_{i,j} |Delta_i k_i - Delta_j k_j|
    Rational epsilon;
    bool fits;  // span <= epsilon
};

// Mean-index-level variant on raw deltas (no orbit data needed).
AbstractWindowReport verify_window_abstract(const std::vector<Rational>& deltas,
                                            const std::vector<long long>& k,
                                            const Rational& epsilon);

}  // namespace reebcalc
