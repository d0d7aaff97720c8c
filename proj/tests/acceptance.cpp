// Acceptance suite: one line per criterion, exact values, no tolerances
// except where a criterion states one. Exits non-zero if any criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "reebcalc/diophantine.hpp"
#include "reebcalc/errors.hpp"
#include "reebcalc/resonance.hpp"
#include "reebcalc/s3.hpp"
#include "reebcalc/spectra.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace reebcalc;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS  criterion " << number << ": " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL  criterion " << number << ": " << label << " -- " << e.what() << "\n";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

}  // namespace

int main() {
    criterion(1, "sphere spectrum of E(1, 5/2) up to degree 10", [] {
        OrbitSystem sys = ellipsoid({Rational(1), Rational(5, 2)});
        PerfectionReport report = perfection_check(sys, standard_sphere_target(2), 10);
        require(report.perfect_up_to_cutoff, "perfect-check failed");
        std::set<long long> degrees;
        for (const auto& [d, refs] : report.spectrum.degrees) {
            require(refs.size() == 1, "more than one generator in degree " + std::to_string(d));
            degrees.insert(d);
        }
        require(degrees == std::set<long long>{2, 4, 6, 8, 10}, "unexpected degree set");
        auto oracle = test::counted_spectrum(sys, 10);
        std::map<long long, std::vector<std::pair<std::string, long long>>> got;
        for (const auto& [d, refs] : report.spectrum.degrees)
            for (const IterateRef& r : refs) got[d].emplace_back(r.orbit, r.k);
        require(got == oracle, "independent enumeration oracle disagrees");
    });

    criterion(2, "resonance identity, exact, for E(1, 5/2) and E(1, 7/3)", [] {
        ResonanceReport a = resonance_identity(ellipsoid({Rational(1), Rational(5, 2)}));
        require(a.terms.size() == 2 && a.terms[0].contribution == Rational(5, 14) &&
                    a.terms[1].contribution == Rational(1, 7),
                "wrong contributions");
        require(a.lhs == Rational(1, 2) && a.verdict, "identity failed for E(1, 5/2)");
        ResonanceReport b = resonance_identity(ellipsoid({Rational(1), Rational(7, 3)}));
        require(b.lhs == Rational(1, 2) && b.verdict, "identity failed for E(1, 7/3)");
    });

    criterion(3, "mean-index-to-action ratios are 14/5 resp. 20/7 on both orbits", [] {
        RatioReport a = ratio_table(ellipsoid({Rational(1), Rational(5, 2)}));
        require(a.all_equal && a.rows[0].ratio == Rational(14, 5) &&
                    a.rows[1].ratio == Rational(14, 5),
                "E(1, 5/2) ratios wrong");
        RatioReport b = ratio_table(ellipsoid({Rational(1), Rational(7, 3)}));
        require(b.all_equal && b.rows[0].ratio == Rational(20, 7) &&
                    b.rows[1].ratio == Rational(20, 7),
                "E(1, 7/3) ratios wrong");
    });

    criterion(4, "counting diagnostic: bounded for E(1, 2584/1597), divergent when broken", [] {
        OrbitSystem sys = ellipsoid({Rational(1), Rational(2584, 1597)});
        CountingReport bounded = counting_diagnostic(sys.orbit("x1"), sys.orbit("x2"), 500);
        require(bounded.max_discrepancy <= 2,
                "discrepancy " + std::to_string(bounded.max_discrepancy) + " > 2");
        SimpleOrbit x("x", Rational(1), OrbitLinearization({Block::positive_hyperbolic(2)}, 0));
        SimpleOrbit y("y", Rational(4), OrbitLinearization({Block::positive_hyperbolic(2)}, 0));
        CountingReport broken = counting_diagnostic(x, y, 200);
        require(broken.max_discrepancy > 10, "broken pair stayed below 10");
    });

    criterion(5, "b = n for spheres n = 2..6; AM table gives 6(k+1) for k = 1..5", [] {
        for (std::size_t n = 2; n <= 6; ++n) {
            BBoundReport r = b_bound(standard_sphere_target(n), n, {0, 50});
            require(r.value == Dim(static_cast<long long>(n)) && r.stabilized,
                    "sphere bound failed at n = " + std::to_string(n));
        }
        for (long long k = 1; k <= 5; ++k) {
            TargetHomology::Table table;
            for (long long d = 0; d <= 3; ++d) table.dims[d] = 0;
            table.tail = TargetHomology::Table::Tail{2, {Dim(2 * k + 2), Dim(0)}};
            BBoundReport r = b_bound(TargetHomology(std::move(table)), 3, {0, 60});
            require(r.value == Dim(6 * (k + 1)) && r.stabilized,
                    "AM bound failed at k = " + std::to_string(k));
        }
    });

    criterion(6, "even-count: ellipsoids meet r = n = b; three elliptic orbits fail for n = 2", [] {
        std::vector<std::vector<Rational>> families{
            {Rational(1), Rational(5, 2)},
            {Rational(1), Rational(5, 2), Rational(9, 4)},
            {Rational(1), Rational(5, 2), Rational(9, 4), Rational(17, 8)}};
        for (const auto& axes : families) {
            OrbitSystem sys = ellipsoid(axes);
            EvenCountReport r =
                even_count_check(sys, standard_sphere_target(sys.n()), {0, 60});
            require(r.pass && r.even_orbits == sys.n() &&
                        r.bound.value == Dim(static_cast<long long>(sys.n())),
                    "ellipsoid family failed at n = " + std::to_string(sys.n()));
        }
        test::OrbitGen gen(321);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<SimpleOrbit> orbits;
            for (int i = 0; i < 3; ++i)
                orbits.emplace_back(
                    "e" + std::to_string(i), Rational(gen.pick(1, 9)),
                    OrbitLinearization({Block::elliptic(gen.theta(9))}, 2 * gen.pick(0, 2)));
            EvenCountReport r = even_count_check(OrbitSystem(2, std::move(orbits)),
                                                 standard_sphere_target(2), {0, 50});
            require(r.even_orbits == 3 && !r.pass, "three elliptic orbits slipped past b = 2");
        }
    });

    criterion(7, "diophantine clustering and oracle agreement", [] {
        ClusterSolution exact =
            cluster({{Rational(14, 5), Rational(7)}, Rational(1, 10), 100, Parity::Any});
        require(exact.k == std::vector<long long>{5, 2} && exact.spread == Rational(0),
                "cluster((14/5, 7), 1/10) wrong");
        bool provable = false;
        try {
            odd_cluster({{Rational(14, 5), Rational(7)}, Rational(1), 10000, Parity::AllOdd});
        } catch (const InfeasibleWithinBoundError& e) {
            provable = e.provable() && e.lower_bound() == "7/5";
        }
        require(provable, "odd parity obstruction not proved");
        ClusterSolution odd =
            odd_cluster({{Rational(14, 5), Rational(7)}, Rational(3, 2), 100, Parity::AllOdd});
        require(odd.k == std::vector<long long>{3, 1} && odd.spread == Rational(7, 5),
                "odd_cluster((14/5, 7), 3/2) wrong");

        std::mt19937_64 rng(91);
        auto draw = [&](long long lo, long long hi) {
            return std::uniform_int_distribution<long long>(lo, hi)(rng);
        };
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t r = static_cast<std::size_t>(draw(2, 3));
            std::vector<Rational> deltas;
            Rational min_delta(0);
            for (std::size_t i = 0; i < r; ++i) {
                long long q = draw(1, 20);
                Rational d(draw(q, 6 * q), q);
                deltas.push_back(d);
                if (i == 0 || d < min_delta) min_delta = d;
            }
            bool odd_parity = trial % 2 == 1;
            Rational epsilon = odd_parity ? min_delta / Rational(draw(1, 3))
                                          : min_delta / Rational(2 * draw(1, 3));
            long long bound = r == 3 ? 25 : 60;
            ClusterQuery q{deltas, epsilon, bound, odd_parity ? Parity::AllOdd : Parity::Any};
            bool cluster_ok = true, oracle_ok = true;
            ClusterSolution from_cluster, from_oracle;
            try {
                from_cluster = odd_parity ? odd_cluster(q) : cluster(q);
            } catch (const InfeasibleWithinBoundError&) {
                cluster_ok = false;
            }
            try {
                from_oracle = brute_oracle(q);
            } catch (const InfeasibleWithinBoundError&) {
                oracle_ok = false;
            }
            require(cluster_ok == oracle_ok, "success/failure disagreement with the oracle");
            if (cluster_ok) {
                check_solution(q, from_cluster);
                check_solution(q, from_oracle);
                require(!(from_cluster.spread < from_oracle.spread),
                        "oracle found a worse spread than the scan");
                if (from_cluster.exact_path)
                    require(from_oracle.spread == Rational(0), "oracle missed an exact solution");
            }
        }
    });

    criterion(8, "S^3 census: consistent = two-elliptic resonance pairs; named rule firings", [] {
        S3Census census = enumerate_small_configs(S3Mode::AssumePerfect, 2, 9, 10);
        std::set<std::string> consistent;
        for (const S3Configuration& c : census.consistent) {
            require(c.entries.size() == 2 && c.entries[0].type() == S3Entry::Type::Elliptic &&
                        c.entries[1].type() == S3Entry::Type::Elliptic,
                    "a non-two-elliptic configuration was marked consistent");
            require(c.entries[0].delta().reciprocal() + c.entries[1].delta().reciprocal() ==
                        Rational(1, 2),
                    "a consistent pair violates the resonance identity");
            std::vector<std::string> pair{c.entries[0].delta().str(), c.entries[1].delta().str()};
            std::sort(pair.begin(), pair.end());
            consistent.insert(pair[0] + "|" + pair[1]);
        }
        std::set<std::string> expected;
        for (long long q1 = 1; q1 <= 10; ++q1)
            for (long long p1 = 1; p1 <= 9 * q1; ++p1) {
                Rational d1(p1, q1);
                if (d1.denominator() != mpz_class(static_cast<long>(q1))) continue;
                if (!(d1 > Rational(2))) continue;
                Rational d2 = Rational(2) * d1 / (d1 - Rational(2));
                if (d2 < d1) continue;  // count unordered pairs once
                if (d2 > Rational(9) || d2.denominator() > mpz_class(10)) continue;
                std::vector<std::string> pair{d1.str(), d2.str()};
                std::sort(pair.begin(), pair.end());
                expected.insert(pair[0] + "|" + pair[1]);
            }
        require(!expected.empty(), "expected pair enumeration came up empty");
        require(consistent == expected, "consistent set differs from the resonance pairs");

        auto fired = [](const S3Verdict& v) -> std::string {
            for (const TraceEntry& t : v.trace)
                if (t.status == RuleStatus::Fired) return t.rule;
            return "";
        };
        require(fired(classify({S3Mode::AssumePerfect,
                                {S3Entry::elliptic(Rational(14, 5), true),
                                 S3Entry::neg_hyperbolic(3)}})) == "R5",
                "{elliptic, neg-hyp} should cite R5");
        require(fired(classify({S3Mode::AssumeExactOrbitSet,
                                {S3Entry::pos_hyperbolic(4), S3Entry::neg_hyperbolic(3)}})) == "R7",
                "{pos-hyp, neg-hyp} should cite R7");
        require(fired(classify({S3Mode::AssumePerfect, {S3Entry::elliptic(Rational(14, 5))}})) ==
                    "R4",
                "{elliptic} should cite R4");
        require(fired(classify({S3Mode::AssumePerfect, {S3Entry::neg_hyperbolic(3)}})) == "R4",
                "{neg-hyp} should cite R4");
        // the mixed triple fires the elliptic/neg-hyperbolic argument, and the
        // double-negative-hyperbolic triple fires the degree collision
        require(fired(classify({S3Mode::AssumePerfect,
                                {S3Entry::elliptic(Rational(14, 5), true),
                                 S3Entry::elliptic(Rational(7), true),
                                 S3Entry::neg_hyperbolic(3)}})) == "R5",
                "{E, E, H-} should cite R5");
        require(fired(classify({S3Mode::AssumePerfect,
                                {S3Entry::elliptic(Rational(14, 5), true),
                                 S3Entry::neg_hyperbolic(3), S3Entry::neg_hyperbolic(5)}})) == "R3",
                "{E, H-, H-} should cite R3");
    });

    criterion(9, "property suite: 1000 orbits, denominators <= 50, k <= 200, zero failures", [] {
        test::OrbitGen gen(1009);
        int orbits_checked = 0;
        while (orbits_checked < 1000) {
            std::size_t n = static_cast<std::size_t>(gen.pick(2, 4));
            SimpleOrbit orbit = gen.orbit(n);
            ++orbits_checked;
            long long k = gen.pick(1, 200);

            require(mean_index(orbit, k) == Rational(k) * mean_index(orbit),
                    "mean-index homogeneity failed");

            long long horizon = degeneracy_horizon(orbit);
            if (horizon > 0)
                for (long long j = horizon; j <= 200; j += horizon)
                    require(is_degenerate_iterate(orbit, j), "horizon multiple not degenerate");

            if (is_degenerate_iterate(orbit, k)) {
                bool threw = false;
                try {
                    cz_index(orbit, k);
                } catch (const DegenerateIterateError&) {
                    threw = true;
                }
                require(threw, "degenerate iterate did not raise");
                continue;
            }
            long long cz = cz_index(orbit, k);
            require((mean_index(orbit, k) - Rational(cz)).abs() <
                        Rational(static_cast<long long>(n) - 1),
                    "index gap violated");
            long long elliptic = 0, windings = 0;
            for (const Block& b : orbit.linearization().blocks()) {
                if (b.is_elliptic())
                    ++elliptic;
                else
                    windings += b.winding();
            }
            long long predicted =
                (((elliptic + k * windings + k * orbit.linearization().shift()) % 2) + 2) % 2;
            require(((cz % 2) + 2) % 2 == predicted, "parity law violated");
            require(is_good(orbit, k) == !(k % 2 == 0 && !is_even(orbit)),
                    "good/bad law violated");
        }
    });

    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return failures == 0 ? 0 : 1;
}
