#include "reebcalc/s3.hpp"

#include <algorithm>

#include "reebcalc/errors.hpp"

namespace reebcalc {

namespace {

std::size_t count_type(const S3Configuration& config, S3Entry::Type t) {
    std::size_t n = 0;
    for (const S3Entry& e : config.entries)
        if (e.type() == t) ++n;
    return n;
}

std::string rule_citation(const std::string& rule) {
    if (rule == "R1")
        return "sphere homology lives in even degrees, so a perfect form has only odd "
               "Conley-Zehnder indices; positive hyperbolic indices are even";
    if (rule == "R2")
        return "even-orbit bound r <= b = 2 for the standard S^3: at most two simple "
               "elliptic orbits of a perfect form";
    if (rule == "R3")
        return "two negative hyperbolic orbits collide: cz(y1^(2m2+1)) = (2m1+1)(2m2+1) "
               "= cz(y2^(2m1+1)), two generators in a degree of rank one";
    if (rule == "R4")
        return "a single simple orbit cannot realize the sphere homology";
    if (rule == "R5")
        return "an elliptic and a negative hyperbolic orbit admit iterates with "
               "|k*Dx - (2l+1)*Dy| < 1; both indices odd forces a degree collision";
    if (rule == "R6")
        return "resonance identity: sum of sigma/Delta over even orbits plus half the "
               "sum over odd orbits equals 1/2";
    if (rule == "R7")
        return "one positive and one negative hyperbolic orbit force "
               "1/(2m+1) - 1/k = 1, which has no solution";
    return "";
}

RuleOutcome skipped(const std::string& why) {
    return {RuleStatus::Skipped, std::nullopt, why};
}

RuleOutcome passed(std::string note = "") {
    return {RuleStatus::Passed, std::nullopt, std::move(note)};
}

RuleOutcome fired(FiringBasis basis, std::string note) {
    return {RuleStatus::Fired, basis, std::move(note)};
}

// Resonance left-hand side on the witnesses: even orbits (elliptic, positive
// hyperbolic) weigh sigma/Delta, odd orbits (negative hyperbolic) weigh
// sigma/(2 Delta); sigma is -1 exactly for positive hyperbolic.
Rational resonance_lhs(const S3Configuration& config) {
    Rational lhs(0);
    for (const S3Entry& e : config.entries) {
        switch (e.type()) {
            case S3Entry::Type::Elliptic:
                lhs += e.delta().reciprocal();
                break;
            case S3Entry::Type::PosHyperbolic:
                lhs -= e.delta().reciprocal();
                break;
            case S3Entry::Type::NegHyperbolic:
                lhs += Rational(1, 2) * e.delta().reciprocal();
                break;
        }
    }
    return lhs;
}

}  // namespace

S3Entry S3Entry::elliptic(Rational delta, bool declared_irrational) {
    if (delta.sign() <= 0)
        throw InvariantError("elliptic entry needs a positive mean index, got " + delta.str());
    return S3Entry(Type::Elliptic, std::move(delta), declared_irrational, 0);
}

S3Entry S3Entry::neg_hyperbolic(long long mu) {
    if (mu < 1 || mu % 2 == 0)
        throw InvariantError("negative hyperbolic entry needs odd mu >= 1, got " +
                             std::to_string(mu));
    return S3Entry(Type::NegHyperbolic, Rational(mu), false, mu);
}

S3Entry S3Entry::pos_hyperbolic(long long mu) {
    if (mu < 2 || mu % 2 != 0)
        throw InvariantError("positive hyperbolic entry needs even mu >= 2, got " +
                             std::to_string(mu));
    return S3Entry(Type::PosHyperbolic, Rational(mu), false, mu);
}

long long S3Entry::mu() const {
    if (type_ == Type::Elliptic) throw InvariantError("mu() on an elliptic entry");
    return mu_;
}

std::string S3Entry::describe() const {
    switch (type_) {
        case Type::Elliptic:
            return "E(" + delta_.str() + (declared_irrational_ ? ", irrational" : "") + ")";
        case Type::NegHyperbolic:
            return "H-(" + std::to_string(mu_) + ")";
        case Type::PosHyperbolic:
            return "H+(" + std::to_string(mu_) + ")";
    }
    return "?";
}

RuleOutcome rule_no_positive_hyperbolic(const S3Configuration& config) {
    if (config.mode != S3Mode::AssumePerfect)
        return skipped("needs perfectness; not assumed in exact-orbit-set mode");
    for (const S3Entry& e : config.entries)
        if (e.type() == S3Entry::Type::PosHyperbolic)
            return fired(FiringBasis::Proved,
                         e.describe() + " has even index " + std::to_string(e.mu()) +
                             ", odd degree " + std::to_string(e.mu() - 1) +
                             ", where the sphere homology vanishes");
    return passed();
}

RuleOutcome rule_at_most_two_elliptic(const S3Configuration& config) {
    if (config.mode != S3Mode::AssumePerfect)
        return skipped("needs perfectness; not assumed in exact-orbit-set mode");
    std::size_t elliptic = count_type(config, S3Entry::Type::Elliptic);
    if (elliptic >= 3)
        return fired(FiringBasis::Proved, std::to_string(elliptic) +
                                              " elliptic (hence even) orbits exceed the bound b = 2");
    return passed();
}

RuleOutcome rule_at_most_one_negative_hyperbolic(const S3Configuration& config) {
    if (config.mode != S3Mode::AssumePerfect)
        return skipped("needs perfectness; not assumed in exact-orbit-set mode");
    std::vector<const S3Entry*> neg;
    for (const S3Entry& e : config.entries)
        if (e.type() == S3Entry::Type::NegHyperbolic) neg.push_back(&e);
    if (neg.size() >= 2) {
        long long mu1 = neg[0]->mu(), mu2 = neg[1]->mu();
        long long collision = mu1 * mu2;
        return fired(FiringBasis::Proved,
                     neg[0]->describe() + "^" + std::to_string(mu2) + " and " + neg[1]->describe() +
                         "^" + std::to_string(mu1) + " both have index " +
                         std::to_string(collision) + ": two generators in degree " +
                         std::to_string(collision - 1));
    }
    return passed();
}

RuleOutcome rule_at_least_two_orbits(const S3Configuration& config) {
    if (config.entries.size() != 1) return passed();
    const S3Entry& e = config.entries.front();
    if (config.mode == S3Mode::AssumeExactOrbitSet) {
        // Standalone argument: one simple orbit forces cz = 3 and Delta = 2.
        if (e.type() == S3Entry::Type::Elliptic)
            return fired(FiringBasis::Proved,
                         "a single-orbit form forces cz = 3 and Delta = 2, violating the "
                         "strict index gap |Delta - cz| < 1");
        return fired(FiringBasis::Proved,
                     "a single-orbit form forces cz = 3 and Delta = 2, but a hyperbolic "
                     "orbit has Delta = cz = " + std::to_string(e.mu()));
    }
    if (e.type() == S3Entry::Type::Elliptic) {
        if (e.delta() == Rational(2))
            return fired(FiringBasis::Proved,
                         "the resonance identity forces Delta = 2: rational, but an elliptic "
                         "mean index is irrational (theta = 0 is degenerate in the shift-2 model)");
        return fired(FiringBasis::Proved,
                     "the resonance identity forces 1/Delta = 1/2, but Delta = " +
                         e.delta().str());
    }
    if (e.type() == S3Entry::Type::NegHyperbolic) {
        long long mu = e.mu();
        if (mu == 3)
            return fired(FiringBasis::Proved,
                         "odd iterates have degrees 3k-1 in {2, 8, 14, ...}: degree 4 is never "
                         "generated");
        if (mu == 1)
            return fired(FiringBasis::Proved,
                         "odd iterates have degrees k-1 in {0, 2, 4, ...}: a generator sits in "
                         "degree 0 where the homology vanishes");
        return fired(FiringBasis::Proved,
                     "odd iterates have degrees k*" + std::to_string(mu) +
                         "-1 starting at " + std::to_string(mu - 1) +
                         " > 2: degree 2 is never generated");
    }
    return fired(FiringBasis::Proved,
                 "a single-orbit form forces cz = 3, but a positive hyperbolic orbit has "
                 "even index " + std::to_string(e.mu()));
}

RuleOutcome rule_no_mixed_elliptic_negative_hyperbolic(const S3Configuration& config,
                                                       long long search_bound) {
    if (config.mode != S3Mode::AssumePerfect)
        return skipped("needs perfectness; not assumed in exact-orbit-set mode");
    if (search_bound < 1) throw InvariantError("search bound must be >= 1");
    bool any_pair = false;
    bool all_exhaustive = true;
    for (const S3Entry& x : config.entries) {
        if (x.type() != S3Entry::Type::Elliptic) continue;
        for (const S3Entry& y : config.entries) {
            if (y.type() != S3Entry::Type::NegHyperbolic) continue;
            any_pair = true;
            const Rational dx = x.delta();
            const long long mu = y.mu();
            const Rational dy = y.delta();
            // k*dx mod 2*dy is periodic in k with period T for a rational
            // witness; scanning one period is exhaustive.
            mpz_class period_z;
            {
                mpz_class num = 2 * static_cast<long>(mu) * dx.denominator();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), dx.numerator().get_mpz_t());
                period_z = num / g;
            }
            long long scan = search_bound;
            bool exhaustive = false;
            if (period_z.fits_slong_p() && period_z.get_si() <= search_bound) {
                scan = period_z.get_si();
                exhaustive = true;
            }
            for (long long k = 1; k <= scan; ++k) {
                Rational target = (dx * Rational(k) / dy - Rational(1)) / Rational(2);
                mpz_class l = target.nearest_tie_low();
                if (l < 0) l = 0;
                if (!l.fits_slong_p() || l.get_si() > search_bound) continue;
                Rational gap = (dx * Rational(k) - dy * Rational(2 * l.get_si() + 1)).abs();
                if (gap < Rational(1)) {
                    long long collision_degree = (2 * l.get_si() + 1) * mu - 1;
                    return fired(FiringBasis::WitnessFound,
                                 "witness k = " + std::to_string(k) + ", l = " +
                                     std::to_string(l.get_si()) + ": |k*" + dx.str() + " - (2l+1)*" +
                                     std::to_string(mu) + "| = " + gap.str() +
                                     " < 1, a degree collision at " +
                                     std::to_string(collision_degree));
                }
            }
            if (!exhaustive) all_exhaustive = false;
            if (x.declared_irrational())
                return fired(FiringBasis::GuaranteedByDensity,
                             "no witness within the scan, but Delta(x)/2Delta(y) is declared "
                             "irrational: k*Delta(x) is dense modulo 2*Delta(y), so a collision "
                             "witness exists beyond every bound");
        }
    }
    if (!any_pair) return passed();
    if (all_exhaustive)
        return {RuleStatus::Inconclusive, std::nullopt,
                "no collision witness exists for these rational witnesses (full residue "
                "period scanned) and irrationality was not declared"};
    return {RuleStatus::Inconclusive, std::nullopt,
            "search bound exhausted without a witness and irrationality was not declared"};
}

RuleOutcome rule_resonance(const S3Configuration& config) {
    if (config.entries.empty()) return passed("no entries to sum over");
    std::size_t pos = count_type(config, S3Entry::Type::PosHyperbolic);
    std::size_t neg = count_type(config, S3Entry::Type::NegHyperbolic);
    std::size_t ell = count_type(config, S3Entry::Type::Elliptic);
    if (config.mode == S3Mode::AssumeExactOrbitSet && config.entries.size() == 2 && pos == 1 &&
        neg == 1)
        return skipped("deferred to R7, the canonical form of the identity for one positive "
                       "plus one negative hyperbolic orbit");
    Rational lhs = resonance_lhs(config);
    Rational residual = (lhs - Rational(1, 2)).abs();
    const char* form = config.mode == S3Mode::AssumePerfect
                           ? "perfect-form identity sum 1/Delta + (1/2) sum 1/Delta = 1/2"
                           : "signed identity sum sigma/Delta + (1/2) sum sigma/Delta = 1/2";
    if (!residual.is_zero())
        return fired(FiringBasis::Proved, std::string(form) + " fails on the witnesses: lhs = " +
                                              lhs.str() + ", residual " + residual.str());
    if (ell == 1 && config.entries.size() >= 2) {
        // All other mean indices are integers, so the identity pins the single
        // elliptic witness to an exact rational value.
        for (const S3Entry& e : config.entries)
            if (e.type() == S3Entry::Type::Elliptic)
                return fired(FiringBasis::Proved,
                             "the identity pins the elliptic mean index to the rational value " +
                                 e.delta().str() +
                                 ", but elliptic mean indices are irrational");
    }
    return passed("identity holds exactly on the witnesses (lhs = 1/2)");
}

RuleOutcome rule_two_hyperbolic_impossible(const S3Configuration& config) {
    if (config.mode != S3Mode::AssumeExactOrbitSet)
        return skipped("applies to exact orbit sets only");
    if (config.entries.size() != 2) return passed();
    const S3Entry* pos = nullptr;
    const S3Entry* neg = nullptr;
    for (const S3Entry& e : config.entries) {
        if (e.type() == S3Entry::Type::PosHyperbolic) pos = &e;
        if (e.type() == S3Entry::Type::NegHyperbolic) neg = &e;
    }
    if (!pos || !neg) return passed();
    long long k = pos->mu() / 2;
    long long m = (neg->mu() - 1) / 2;
    return fired(FiringBasis::Proved,
                 "resonance reads -1/" + std::to_string(2 * k) + " + 1/" +
                     std::to_string(2 * (2 * m + 1)) + " = 1/2, i.e. 1/" +
                     std::to_string(2 * m + 1) + " - 1/" + std::to_string(k) +
                     " = 1: impossible for k >= 1, m >= 0");
}

S3Verdict classify(const S3Configuration& config, long long search_bound) {
    if (config.entries.empty())
        throw InvariantError("classification needs a non-empty configuration");
    S3Verdict verdict{true, {}, search_bound};
    auto apply = [&](const std::string& rule, RuleOutcome outcome) {
        verdict.trace.push_back({rule, rule_citation(rule), outcome.status, outcome.basis,
                                 std::move(outcome.note)});
        if (outcome.status == RuleStatus::Fired) verdict.consistent = false;
        return outcome.status == RuleStatus::Fired;
    };
    if (apply("R1", rule_no_positive_hyperbolic(config))) return verdict;
    if (apply("R2", rule_at_most_two_elliptic(config))) return verdict;
    if (apply("R3", rule_at_most_one_negative_hyperbolic(config))) return verdict;
    if (apply("R4", rule_at_least_two_orbits(config))) return verdict;
    if (apply("R5", rule_no_mixed_elliptic_negative_hyperbolic(config, search_bound)))
        return verdict;
    if (apply("R6", rule_resonance(config))) return verdict;
    if (apply("R7", rule_two_hyperbolic_impossible(config))) return verdict;
    return verdict;
}

WitnessEllipsoid witness_ellipsoid(const Rational& delta1) {
    if (!(delta1 > Rational(2)))
        throw DeltaTooSmallError("witness ellipsoid needs delta1 > 2, got " + delta1.str());
    Rational gap = delta1 - Rational(2);
    return {Rational(1), Rational(2) / gap, Rational(2) * delta1 / gap};
}

S3Census enumerate_small_configs(S3Mode mode, int max_entries, long long mu_max,
                                 long long delta_denominator_max, long long search_bound) {
    if (max_entries < 1 || max_entries > 3 || mu_max < 0 || mu_max > 15 ||
        delta_denominator_max < 1 || delta_denominator_max > 12)
        throw GuardExceededError(
            "census guard: max_entries <= 3, mu_max <= 15, denominator_max <= 12");

    std::vector<S3Entry> values;
    for (long long q = 1; q <= delta_denominator_max; ++q)
        for (long long p = 1; p <= mu_max * q; ++p) {
            mpz_class g;
            mpz_class pz = static_cast<long>(p), qz = static_cast<long>(q);
            mpz_gcd(g.get_mpz_t(), pz.get_mpz_t(), qz.get_mpz_t());
            if (g != 1) continue;
            values.push_back(S3Entry::elliptic(Rational(p, q), /*declared_irrational=*/true));
        }
    for (long long mu = 1; mu <= mu_max; mu += 2) values.push_back(S3Entry::neg_hyperbolic(mu));
    for (long long mu = 2; mu <= mu_max; mu += 2) values.push_back(S3Entry::pos_hyperbolic(mu));

    const std::size_t v = values.size();
    {
        // multisets of size <= max_entries
        double count = 0;
        double binom = 1;
        for (int s = 1; s <= max_entries; ++s) {
            binom = binom * (static_cast<double>(v) + s - 1) / s;
            count += binom;
        }
        if (count > 2e6)
            throw GuardExceededError("census would enumerate more than 2e6 configurations");
    }

    S3Census census{0, {}, {}};
    std::vector<std::size_t> pick;
    auto sweep = [&](auto&& self, std::size_t from) -> void {
        if (!pick.empty()) {
            S3Configuration config{mode, {}};
            for (std::size_t idx : pick) config.entries.push_back(values[idx]);
            S3Verdict verdict = classify(config, search_bound);
            ++census.total;
            if (verdict.consistent) {
                census.consistent.push_back(std::move(config));
            } else {
                for (const TraceEntry& t : verdict.trace)
                    if (t.status == RuleStatus::Fired) {
                        ++census.ruled_out_by[t.rule];
                        break;
                    }
            }
        }
        if (pick.size() == static_cast<std::size_t>(max_entries)) return;
        for (std::size_t i = from; i < v; ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    sweep(sweep, 0);
    return census;
}

}  // namespace reebcalc
