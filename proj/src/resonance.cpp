#include "reebcalc/resonance.hpp"

#include <algorithm>

#include "reebcalc/errors.hpp"

namespace reebcalc {

ResonanceReport resonance_identity(const OrbitSystem& system,
                                   const std::optional<Rational>& tolerance) {
    if (system.n() != 2)
        throw WrongDimensionError("resonance identity is implemented for n = 2 only, got n = " +
                                  std::to_string(system.n()));
    ResonanceReport report{Rational(0), Rational(1, 2), {}, {}, false, Rational(0)};
    for (const SimpleOrbit& orbit : system.orbits()) {
        Rational delta = mean_index(orbit);
        if (delta.sign() <= 0) {
            report.excluded.push_back(orbit.name());
            continue;
        }
        int sign = sigma(orbit, 1);
        Rational weight = is_even(orbit) ? Rational(1) : Rational(1, 2);
        Rational contribution = weight * Rational(sign) / delta;
        report.terms.push_back({orbit.name(), sign, delta, weight, contribution});
        report.lhs += contribution;
    }
    report.residual = (report.lhs - report.expected).abs();
    report.verdict = tolerance ? report.residual <= *tolerance : report.lhs == report.expected;
    return report;
}

RatioReport ratio_table(const OrbitSystem& system, const std::optional<Rational>& tolerance) {
    RatioReport report{{}, true};
    for (const SimpleOrbit& orbit : system.orbits()) {
        Rational delta = mean_index(orbit);
        report.rows.push_back({orbit.name(), delta, orbit.action(), delta / orbit.action()});
    }
    for (const RatioRow& row : report.rows) {
        Rational gap = (row.ratio - report.rows.front().ratio).abs();
        if (tolerance ? gap > *tolerance : !gap.is_zero()) report.all_equal = false;
    }
    return report;
}

CountingReport counting_diagnostic(const SimpleOrbit& x, const SimpleOrbit& y, long long k_max) {
    if (k_max < 1) throw InvariantError("counting diagnostic needs k_max >= 1");
    if (x.linearization().ambient_n() != y.linearization().ambient_n())
        throw WrongDimensionError("counting diagnostic needs orbits of the same ambient dimension");
    Rational delta_x = mean_index(x);
    for (const SimpleOrbit* orbit : {&x, &y}) {
        if (mean_index(*orbit).sign() <= 0)
            throw NonPositiveMeanIndexError("orbit '" + orbit->name() +
                                            "' has non-positive mean index");
    }
    const Rational gap(static_cast<long long>(x.linearization().ambient_n()) - 1);

    // Iterations of x between x and y^k, counted two ways. By the action the
    // count has the closed form floor(k A(y)/A(x)) - 1; by the index it is the
    // number of j >= 2 with cz(x^j) <= cz(y^k), evaluated on the actual
    // iterates (cz(x^j) > j Delta(x) - (n-1) bounds the scan).
    std::vector<long long> cz_x_cache;  // cz(x, j) for j = 2, 3, ...
    auto cz_x_at = [&](std::size_t idx) {
        while (cz_x_cache.size() <= idx)
            cz_x_cache.push_back(cz_index(x, static_cast<long long>(cz_x_cache.size()) + 2));
        return cz_x_cache[idx];
    };

    CountingReport report{k_max, 0, {}};
    for (long long k = 1; k <= k_max; ++k) {
        if (iterate_action(y, k) <= x.action()) continue;
        mpz_class action_count = (iterate_action(y, k) / x.action()).floor();
        if (!action_count.fits_slong_p())
            throw InvariantError("action ratio overflows the counting range");
        long long by_action = action_count.get_si() - 1;
        long long cz_yk = cz_index(y, k);
        long long by_index = 0;
        for (long long j = 2; Rational(j) * delta_x - gap <= Rational(cz_yk); ++j)
            if (cz_x_at(static_cast<std::size_t>(j - 2)) <= cz_yk) ++by_index;
        long long diff = by_action - by_index;
        report.rows.push_back({k, by_action, by_index, diff});
        report.max_discrepancy = std::max(report.max_discrepancy, diff < 0 ? -diff : diff);
    }
    return report;
}

OrderingReport action_degree_ordering(const OrbitSystem& system, long long max_degree) {
    PerfectionReport perfection =
        perfection_check(system, standard_sphere_target(system.n()), max_degree);
    if (!perfection.perfect_up_to_cutoff)
        throw InvariantError("action/degree ordering is only defined for systems that are "
                             "perfect for the standard sphere up to the cutoff");
    OrderingReport report{true, {}, std::nullopt};
    for (const auto& [degree, refs] : perfection.spectrum.degrees)
        report.actions_by_degree.emplace_back(degree, refs.front().action);
    for (std::size_t i = 1; i < report.actions_by_degree.size(); ++i) {
        const auto& [d_prev, a_prev] = report.actions_by_degree[i - 1];
        const auto& [d_here, a_here] = report.actions_by_degree[i];
        if (!(a_prev < a_here)) {
            report.strictly_increasing = false;
            if (!report.violation) report.violation = {d_prev, d_here, a_prev, a_here};
        }
    }
    return report;
}

}  // namespace reebcalc
