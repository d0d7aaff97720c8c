#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reebcalc/orbit.hpp"
#include "reebcalc/rational.hpp"

namespace reebcalc {

// Ambient parameter n (manifold M^{2n-1}) plus finitely many simple orbits
// with distinct names, each with exactly n-1 blocks.
class OrbitSystem {
public:
    OrbitSystem(std::size_t n, std::vector<SimpleOrbit> orbits);

    std::size_t n() const noexcept { return n_; }
    const std::vector<SimpleOrbit>& orbits() const noexcept { return orbits_; }
    const SimpleOrbit& orbit(const std::string& name) const;

private:
    std::size_t n_;
    std::vector<SimpleOrbit> orbits_;
};

// Graded dimension; nullopt encodes an infinite-dimensional degree.
using Dim = std::optional<long long>;

// Target contact homology as a total map degree -> dimension.
class TargetHomology {
public:
    struct StandardSphere {
        std::size_t n;  // dim 1 at even degrees >= 2n-2, else 0
    };
    struct Table {
        std::map<long long, Dim> dims;
        // Optional eventually-periodic tail, starting right after the largest
        // explicit degree (at 0 when dims is empty): dim(d) = pattern[(d - start) % period].
        struct Tail {
            long long period;
            std::vector<Dim> pattern;
        };
        std::optional<Tail> tail;
    };
    struct Prequantization {
        std::vector<long long> betti;  // Betti numbers of the base B, degrees 0..len-1
        Rational delta;                // mean index of the fiber, > 0
    };

    explicit TargetHomology(StandardSphere s);
    explicit TargetHomology(Table t);
    explicit TargetHomology(Prequantization p);

    Dim dim(long long degree) const;
    // A bound L with dim(d) = 0 for all d < L.
    long long support_lower_bound() const;

    bool is_standard_sphere() const { return std::holds_alternative<StandardSphere>(v_); }
    const StandardSphere* sphere() const { return std::get_if<StandardSphere>(&v_); }

private:
    std::variant<StandardSphere, Table, Prequantization> v_;
};

TargetHomology standard_sphere_target(std::size_t n);
// Dimension at degree d is sum over m >= 1 of betti[d + 2 - m*delta]
// (non-integer or out-of-range arguments contribute 0).
TargetHomology prequantization_target(const std::vector<long long>& betti, const Rational& delta);

// Enumeration cutoff: by total action or by grading degree.
struct ByAction {
    Rational max_action;
};
struct ByDegree {
    long long max_degree;
};
using Cutoff = std::variant<ByAction, ByDegree>;

struct IterateRef {
    std::string orbit;
    long long k;
    Rational action;
    long long cz;
    friend bool operator==(const IterateRef&, const IterateRef&) = default;
};

// Good non-degenerate iterates within the cutoff, bucketed by degree and
// canonically ordered (degree, then orbit name, then k).
struct DegreeSpectrum {
    Cutoff cutoff;
    std::map<long long, std::vector<IterateRef>> degrees;
};

DegreeSpectrum enumerate_iterates(const OrbitSystem& system, const Cutoff& cutoff);

struct PerfectionMismatch {
    long long degree;
    long long count;       // good iterates found
    Dim target_dim;        // expected
};
struct PerfectionReport {
    long long max_degree;
    bool perfect_up_to_cutoff;
    std::vector<PerfectionMismatch> mismatches;
    DegreeSpectrum spectrum;
};

// Compare generator counts with the target dimension in every degree up to
// the cutoff; perfect means the complex already equals the homology there.
PerfectionReport perfection_check(const OrbitSystem& system, const TargetHomology& target,
                                  long long max_degree);

struct ParityClassReport {
    HomotopyClass::Iterated klass;
    std::vector<std::pair<IterateRef, int>> members;  // iterate, cz parity
    bool consistent;
};
struct GeometricPerfectnessReport {
    bool geometrically_perfect;
    std::vector<ParityClassReport> classes;
};

// Within each iterated free homotopy class, all Conley-Zehnder parities must
// agree; distinct classes are never compared.
GeometricPerfectnessReport geometric_perfectness(const OrbitSystem& system, long long max_degree);

struct ProbeRange {
    long long m_min;
    long long m_max;
};

struct BBoundReport {
    Dim value;        // nullopt = infinite
    bool stabilized;  // max attained in the first half of the probe range
    ProbeRange probe;
    std::size_t window_length;  // 2n - 1
};

// Sliding-window surrogate for b = limsup_m sum_{i=0}^{2n-2} dim(m+i).
BBoundReport b_bound(const TargetHomology& target, std::size_t n, const ProbeRange& probe);

struct EvenCountReport {
    std::size_t even_orbits;  // r
    BBoundReport bound;       // b
    bool pass;                // r <= b
};

// r <= b check; failure refutes perfectness of the system, not the bound.
EvenCountReport even_count_check(const OrbitSystem& system, const TargetHomology& target,
                                 const ProbeRange& probe);

// Irrational-ellipsoid model system: orbit j has action a_j, one elliptic
// block with rotation a_j/a_i per i != j, and shift 2 (disk filling), so its
// mean index is 2 * sum_i a_j/a_i. Orbits are named x1..xn.
OrbitSystem ellipsoid(const std::vector<Rational>& semiaxes, bool declare_irrational = false);

}  // namespace reebcalc
