#include "reebcalc/diophantine.hpp"

#include <algorithm>

#include "reebcalc/errors.hpp"

namespace reebcalc {

namespace {

void validate_query(const ClusterQuery& query) {
    if (query.deltas.empty()) throw InvariantError("cluster query needs at least one delta");
    for (std::size_t i = 0; i < query.deltas.size(); ++i)
        if (query.deltas[i].sign() <= 0)
            throw InvariantError("delta #" + std::to_string(i + 1) + " must be positive, got " +
                                 query.deltas[i].str());
    if (query.epsilon.sign() <= 0)
        throw InvariantError("epsilon must be positive, got " + query.epsilon.str());
    if (query.bound < 1) throw InvariantError("bound must be >= 1");
}

std::size_t argmax_delta(const std::vector<Rational>& deltas) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if (deltas[i] > deltas[best]) best = i;
    return best;
}

Rational spread_of(const std::vector<Rational>& deltas, const std::vector<long long>& k) {
    Rational lo = deltas[0] * Rational(k[0]);
    Rational hi = lo;
    for (std::size_t i = 1; i < deltas.size(); ++i) {
        Rational v = deltas[i] * Rational(k[i]);
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    return hi - lo;
}

// Exact common-multiple solution: k_i = L / delta_i with L the rational lcm.
std::vector<mpz_class> exact_multipliers(const std::vector<Rational>& deltas) {
    Rational common = deltas[0];
    for (std::size_t i = 1; i < deltas.size(); ++i) common = lcm(common, deltas[i]);
    std::vector<mpz_class> k;
    for (const Rational& d : deltas) {
        Rational m = common / d;
        k.push_back(m.numerator());  // integral by construction
    }
    return k;
}

// Largest pairwise parity lower bound for odd multipliers, zero when no pair
// is obstructed: with delta_i = p_i/q over a common denominator and
// g = gcd(p_i, p_j), an odd p_i/g + p_j/g forces |p_i k_i - p_j k_j| >= g.
Rational odd_parity_lower_bound(const std::vector<Rational>& deltas) {
    Rational bound(0);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        for (std::size_t j = i + 1; j < deltas.size(); ++j) {
            mpz_class q;
            mpz_lcm(q.get_mpz_t(), deltas[i].denominator().get_mpz_t(),
                    deltas[j].denominator().get_mpz_t());
            mpz_class pi = deltas[i].numerator() * (q / deltas[i].denominator());
            mpz_class pj = deltas[j].numerator() * (q / deltas[j].denominator());
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pi.get_mpz_t(), pj.get_mpz_t());
            mpz_class si = pi / g, sj = pj / g;
            if ((si + sj) % 2 != 0) {
                Rational pair_bound(g, q);
                if (pair_bound > bound) bound = pair_bound;
            }
        }
    }
    return bound;
}

}  // namespace

void check_solution(const ClusterQuery& query, const ClusterSolution& solution) {
    if (solution.k.size() != query.deltas.size())
        throw InvariantError("cluster solution has the wrong arity");
    for (long long ki : solution.k) {
        if (ki < 1) throw InvariantError("cluster solution with k < 1");
        if (query.parity == Parity::AllOdd && ki % 2 == 0)
            throw InvariantError("cluster solution violates the all-odd parity constraint");
    }
    Rational recomputed = spread_of(query.deltas, solution.k);
    if (recomputed != solution.spread)
        throw InvariantError("cluster solution spread mismatch: stated " + solution.spread.str() +
                             ", recomputed " + recomputed.str());
    if (!(solution.spread < query.epsilon))
        throw InvariantError("cluster solution spread " + solution.spread.str() +
                             " not below epsilon " + query.epsilon.str());
}

ClusterSolution cluster(const ClusterQuery& query) {
    validate_query(query);
    if (query.parity == Parity::AllOdd) return odd_cluster(query);
    const std::size_t r = query.deltas.size();

    // Exact rational fast path, taken whenever it fits the box.
    {
        std::vector<mpz_class> exact = exact_multipliers(query.deltas);
        bool fits = true;
        std::vector<long long> k(r);
        for (std::size_t i = 0; i < r; ++i) {
            if (!exact[i].fits_slong_p() || exact[i].get_si() > query.bound) {
                fits = false;
                break;
            }
            k[i] = exact[i].get_si();
        }
        if (fits) {
            ClusterSolution solution{std::move(k), Rational(0), true};
            check_solution(query, solution);
            return solution;
        }
    }

    // Nearest-integer scan over the multiplier of the largest delta.
    const std::size_t lead = argmax_delta(query.deltas);
    for (long long k_lead = 1; k_lead <= query.bound; ++k_lead) {
        Rational center = query.deltas[lead] * Rational(k_lead);
        std::vector<long long> k(r);
        k[lead] = k_lead;
        bool in_box = true;
        for (std::size_t i = 0; i < r && in_box; ++i) {
            if (i == lead) continue;
            mpz_class rounded = (center / query.deltas[i]).nearest_tie_low();
            if (rounded < 1) rounded = 1;
            if (!rounded.fits_slong_p() || rounded.get_si() > query.bound) {
                in_box = false;
                break;
            }
            k[i] = rounded.get_si();
        }
        if (!in_box) continue;
        Rational spread = spread_of(query.deltas, k);
        if (spread < query.epsilon) {
            ClusterSolution solution{std::move(k), std::move(spread), false};
            check_solution(query, solution);
            return solution;
        }
    }

    std::string needed;
    {
        std::vector<mpz_class> exact = exact_multipliers(query.deltas);
        mpz_class max_needed = 0;
        for (const mpz_class& ki : exact) max_needed = std::max(max_needed, ki);
        needed = max_needed.get_str();
    }
    throw InfeasibleWithinBoundError(
        "no clustering below epsilon = " + query.epsilon.str() + " within bound " +
            std::to_string(query.bound) +
            "; a solution exists at a larger horizon (the exact common-multiple "
            "solution needs bound >= " + needed + ")",
        /*provable=*/false);
}

ClusterSolution odd_cluster(const ClusterQuery& query) {
    validate_query(query);
    const std::size_t r = query.deltas.size();

    Rational obstruction = odd_parity_lower_bound(query.deltas);
    if (obstruction >= query.epsilon)
        throw InfeasibleWithinBoundError(
            "provably infeasible: a parity obstruction forces spread >= " + obstruction.str() +
                " for all odd multipliers, but epsilon = " + query.epsilon.str(),
            /*provable=*/true, obstruction.str());

    const std::size_t lead = argmax_delta(query.deltas);
    const long long k_cap = 2 * query.bound + 1;
    for (long long m = 0; m <= query.bound; ++m) {
        long long k_lead = 2 * m + 1;
        Rational center = query.deltas[lead] * Rational(k_lead);
        std::vector<long long> k(r);
        k[lead] = k_lead;
        bool in_box = true;
        for (std::size_t i = 0; i < r && in_box; ++i) {
            if (i == lead) continue;
            // nearest odd multiplier: k_i = 2 m_i + 1 with m_i nearest to (t-1)/2
            Rational target = center / query.deltas[i];
            mpz_class mi = ((target - Rational(1)) / Rational(2)).nearest_tie_low();
            if (mi < 0) mi = 0;
            mpz_class ki = 2 * mi + 1;
            if (!ki.fits_slong_p() || ki.get_si() > k_cap) {
                in_box = false;
                break;
            }
            k[i] = ki.get_si();
        }
        if (!in_box) continue;
        Rational spread = spread_of(query.deltas, k);
        if (spread < query.epsilon) {
            ClusterSolution solution{std::move(k), std::move(spread), false};
            check_solution(query, solution);
            return solution;
        }
    }

    throw InfeasibleWithinBoundError(
        "no all-odd clustering below epsilon = " + query.epsilon.str() + " within m <= " +
            std::to_string(query.bound) +
            "; bound exhausted (no parity obstruction detected, a larger horizon may succeed)",
        /*provable=*/false);
}

ClusterSolution brute_oracle(const ClusterQuery& query) {
    validate_query(query);
    const std::size_t r = query.deltas.size();
    if (r > 4 || query.bound > 200)
        throw GuardExceededError("brute oracle guard: r <= 4 and bound <= 200, got r = " +
                                 std::to_string(r) + ", bound = " + std::to_string(query.bound));

    const bool odd = query.parity == Parity::AllOdd;
    const long long lo = 1;
    const long long hi = odd ? 2 * query.bound + 1 : query.bound;
    const long long step = odd ? 2 : 1;

    std::vector<long long> k(r, lo), best_k;
    Rational best_spread(0);
    bool have_best = false;

    // Depth-first over the box in lexicographic order; coordinates after the
    // first are clipped to the window |delta_i k_i - delta_0 k_0| <= best.
    auto descend = [&](auto&& self, std::size_t depth) -> void {
        if (depth == r) {
            Rational spread = spread_of(query.deltas, k);
            if (!have_best || spread < best_spread) {
                have_best = true;
                best_spread = spread;
                best_k = k;
            }
            return;
        }
        long long from = lo, to = hi;
        if (depth > 0 && have_best) {
            Rational center = query.deltas[0] * Rational(k[0]);
            Rational lo_r = (center - best_spread) / query.deltas[depth];
            Rational hi_r = (center + best_spread) / query.deltas[depth];
            mpz_class lo_z = lo_r.ceil(), hi_z = hi_r.floor();
            if (lo_z.fits_slong_p()) from = std::max(from, static_cast<long long>(lo_z.get_si()));
            if (hi_z.fits_slong_p()) to = std::min(to, static_cast<long long>(hi_z.get_si()));
            if (odd && from % 2 == 0) ++from;
        }
        for (long long v = from; v <= to; v += step) {
            k[depth] = v;
            self(self, depth + 1);
        }
    };

    // Seed the pruning window with the trivially valid all-ones point.
    {
        std::vector<long long> ones(r, 1);
        best_spread = spread_of(query.deltas, ones);
        best_k = std::move(ones);
        have_best = true;
    }
    descend(descend, 0);

    if (!(best_spread < query.epsilon))
        throw InfeasibleWithinBoundError(
            "exhaustive box search: minimal achievable spread is " + best_spread.str() +
                ", not below epsilon = " + query.epsilon.str(),
            /*provable=*/false);
    ClusterSolution solution{std::move(best_k), std::move(best_spread), false};
    check_solution(query, solution);
    return solution;
}

WindowReport verify_window(const OrbitSystem& system, const std::vector<long long>& k,
                           const Rational& epsilon) {
    if (k.size() != system.orbits().size())
        throw InvariantError("verify_window needs one multiplier per orbit");
    if (epsilon.sign() <= 0) throw InvariantError("epsilon must be positive");
    long long d_min = 0, d_max = 0;
    bool first = true;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const SimpleOrbit& orbit = system.orbits()[i];
        require_nondegenerate(orbit, k[i]);
        if (!is_good(orbit, k[i]))
            throw BadIterateError("iterate " + orbit.name() + "^" + std::to_string(k[i]) +
                                  " is bad (even iterate of an odd orbit)");
        long long d = degree(orbit, k[i], system.n());
        if (first || d < d_min) d_min = d;
        if (first || d > d_max) d_max = d;
        first = false;
    }
    Rational window = Rational(2 * (static_cast<long long>(system.n()) - 1)) + epsilon;
    return {d_min, d_max, window, Rational(d_max - d_min) <= window};
}

AbstractWindowReport verify_window_abstract(const std::vector<Rational>& deltas,
                                            const std::vector<long long>& k,
                                            const Rational& epsilon) {
    if (deltas.empty() || deltas.size() != k.size())
        throw InvariantError("abstract window needs matching non-empty deltas and multipliers");
    for (long long ki : k)
        if (ki < 1) throw InvariantError("multipliers must be >= 1");
    Rational span = spread_of(deltas, k);
    return {span, epsilon, span <= epsilon};
}

}  // namespace reebcalc
