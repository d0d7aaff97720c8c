#include "reebcalc/spectra.hpp"

#include <algorithm>
#include <set>

#include "reebcalc/errors.hpp"

namespace reebcalc {

OrbitSystem::OrbitSystem(std::size_t n, std::vector<SimpleOrbit> orbits)
    : n_(n), orbits_(std::move(orbits)) {
    if (n_ < 2) throw InvariantError("ambient parameter n must be >= 2, got " + std::to_string(n_));
    std::set<std::string> names;
    for (const SimpleOrbit& o : orbits_) {
        if (!names.insert(o.name()).second)
            throw InvariantError("duplicate orbit name '" + o.name() + "'");
        if (o.linearization().ambient_n() != n_)
            throw InvariantError("orbit '" + o.name() + "' has " +
                                 std::to_string(o.linearization().blocks().size()) +
                                 " blocks; expected n-1 = " + std::to_string(n_ - 1));
    }
}

const SimpleOrbit& OrbitSystem::orbit(const std::string& name) const {
    for (const SimpleOrbit& o : orbits_)
        if (o.name() == name) return o;
    throw InvariantError("no orbit named '" + name + "'");
}

TargetHomology::TargetHomology(StandardSphere s) : v_(std::move(s)) {
    if (std::get<StandardSphere>(v_).n < 2)
        throw InvariantError("standard sphere target needs n >= 2");
}

TargetHomology::TargetHomology(Table t) : v_(std::move(t)) {
    const Table& table = std::get<Table>(v_);
    for (const auto& [d, dim] : table.dims)
        if (dim && *dim < 0) throw InvariantError("negative dimension in table at degree " + std::to_string(d));
    if (table.tail) {
        if (table.tail->period < 1 ||
            table.tail->pattern.size() != static_cast<std::size_t>(table.tail->period))
            throw InvariantError("table tail pattern length must equal its period");
        for (const Dim& dim : table.tail->pattern)
            if (dim && *dim < 0) throw InvariantError("negative dimension in table tail");
    }
}

TargetHomology::TargetHomology(Prequantization p) : v_(std::move(p)) {
    const Prequantization& preq = std::get<Prequantization>(v_);
    if (preq.betti.empty()) throw InvariantError("prequantization target needs Betti numbers");
    for (long long b : preq.betti)
        if (b < 0) throw InvariantError("negative Betti number");
    if (preq.delta.sign() <= 0)
        throw NonPositiveDeltaError("fiber mean index must be positive, got " + preq.delta.str());
}

Dim TargetHomology::dim(long long degree) const {
    if (const auto* s = std::get_if<StandardSphere>(&v_)) {
        long long lowest = 2 * static_cast<long long>(s->n) - 2;
        return (degree >= lowest && degree % 2 == 0) ? Dim(1) : Dim(0);
    }
    if (const auto* t = std::get_if<Table>(&v_)) {
        auto it = t->dims.find(degree);
        if (it != t->dims.end()) return it->second;
        if (t->tail) {
            long long start = t->dims.empty() ? 0 : t->dims.rbegin()->first + 1;
            if (degree >= start)
                return t->tail->pattern[static_cast<std::size_t>((degree - start) % t->tail->period)];
        }
        return Dim(0);
    }
    const auto& preq = std::get<Prequantization>(v_);
    // dim(d) = sum over m >= 1 of betti[d + 2 - m*delta]; only m that make
    // the argument integral contribute, i.e. multiples of delta's denominator,
    // so the integral arguments are d + 2 - t*p for t >= 1 (delta = p/q).
    long long total = 0;
    mpz_class p = preq.delta.numerator();
    if (!p.fits_slong_p()) return Dim(0);  // every argument already negative
    long long step = p.get_si();
    for (long long t = 1;; ++t) {
        long long arg = degree + 2 - t * step;
        if (arg < 0) break;
        if (arg < static_cast<long long>(preq.betti.size())) total += preq.betti[static_cast<std::size_t>(arg)];
    }
    return Dim(total);
}

long long TargetHomology::support_lower_bound() const {
    if (const auto* s = std::get_if<StandardSphere>(&v_))
        return 2 * static_cast<long long>(s->n) - 2;
    if (const auto* t = std::get_if<Table>(&v_)) {
        if (!t->dims.empty()) return t->dims.begin()->first;
        return 0;
    }
    const auto& preq = std::get<Prequantization>(v_);
    // smallest integral argument is at m = denominator(delta), i.e. d = p - 2
    mpz_class p = preq.delta.numerator();
    if (!p.fits_slong_p()) return 0;
    return p.get_si() - 2;
}

TargetHomology standard_sphere_target(std::size_t n) {
    return TargetHomology(TargetHomology::StandardSphere{n});
}

TargetHomology prequantization_target(const std::vector<long long>& betti, const Rational& delta) {
    return TargetHomology(TargetHomology::Prequantization{betti, delta});
}

namespace {

long long iterate_bound(const SimpleOrbit& orbit, const Cutoff& cutoff) {
    if (const auto* by_action = std::get_if<ByAction>(&cutoff)) {
        // largest k with k*A <= A_max
        Rational ratio = by_action->max_action / orbit.action();
        mpz_class k = ratio.floor();
        if (k < 0) return 0;
        if (!k.fits_slong_p()) throw InvariantError("action cutoff enumerates too many iterates");
        return k.get_si();
    }
    const auto& by_degree = std::get<ByDegree>(cutoff);
    Rational delta = mean_index(orbit);
    if (delta.sign() <= 0)
        throw NonPositiveMeanIndexError("orbit '" + orbit.name() +
                                        "' has mean index " + delta.str() +
                                        " <= 0; a degree cutoff cannot bound its iterates");
    // degree(x^k) > k*delta - 2, so k <= (d_max + 2)/delta suffices
    Rational bound = Rational(by_degree.max_degree + 2) / delta;
    mpz_class k = bound.floor();
    if (k < 0) return 0;
    if (!k.fits_slong_p()) throw InvariantError("degree cutoff enumerates too many iterates");
    return k.get_si();
}

}  // namespace

DegreeSpectrum enumerate_iterates(const OrbitSystem& system, const Cutoff& cutoff) {
    DegreeSpectrum spectrum{cutoff, {}};
    const auto* by_degree = std::get_if<ByDegree>(&cutoff);
    for (const SimpleOrbit& orbit : system.orbits()) {
        long long k_max = iterate_bound(orbit, cutoff);
        for (long long k = 1; k <= k_max; ++k) {
            if (!is_good(orbit, k)) {
                require_nondegenerate(orbit, k);
                continue;
            }
            long long cz = cz_index(orbit, k);  // throws on degenerate iterates in range
            long long d = cz + static_cast<long long>(system.n()) - 3;
            if (by_degree && d > by_degree->max_degree) continue;
            spectrum.degrees[d].push_back({orbit.name(), k, iterate_action(orbit, k), cz});
        }
    }
    for (auto& [d, refs] : spectrum.degrees)
        std::sort(refs.begin(), refs.end(), [](const IterateRef& a, const IterateRef& b) {
            return a.orbit != b.orbit ? a.orbit < b.orbit : a.k < b.k;
        });
    return spectrum;
}

PerfectionReport perfection_check(const OrbitSystem& system, const TargetHomology& target,
                                  long long max_degree) {
    PerfectionReport report{max_degree, true, {}, enumerate_iterates(system, ByDegree{max_degree})};
    long long low = target.support_lower_bound();
    if (!report.spectrum.degrees.empty())
        low = std::min(low, report.spectrum.degrees.begin()->first);
    for (long long d = low; d <= max_degree; ++d) {
        auto it = report.spectrum.degrees.find(d);
        long long count = it == report.spectrum.degrees.end()
                              ? 0
                              : static_cast<long long>(it->second.size());
        Dim want = target.dim(d);
        if (!want || *want != count) {
            report.perfect_up_to_cutoff = false;
            report.mismatches.push_back({d, count, want});
        }
    }
    return report;
}

GeometricPerfectnessReport geometric_perfectness(const OrbitSystem& system, long long max_degree) {
    DegreeSpectrum spectrum = enumerate_iterates(system, ByDegree{max_degree});
    std::map<HomotopyClass::Iterated, ParityClassReport> classes;
    for (const auto& [d, refs] : spectrum.degrees) {
        (void)d;
        for (const IterateRef& ref : refs) {
            const SimpleOrbit& orbit = system.orbit(ref.orbit);
            auto klass = orbit.homotopy_class().iterate(ref.k);
            auto [it, fresh] = classes.try_emplace(klass, ParityClassReport{klass, {}, true});
            it->second.members.emplace_back(ref, static_cast<int>(((ref.cz % 2) + 2) % 2));
        }
    }
    GeometricPerfectnessReport report{true, {}};
    for (auto& [klass, entry] : classes) {
        (void)klass;
        for (const auto& [ref, parity] : entry.members)
            if (parity != entry.members.front().second) entry.consistent = false;
        if (!entry.consistent) report.geometrically_perfect = false;
        report.classes.push_back(std::move(entry));
    }
    return report;
}

BBoundReport b_bound(const TargetHomology& target, std::size_t n, const ProbeRange& probe) {
    if (n < 2) throw InvariantError("b_bound needs n >= 2");
    if (const auto* s = target.sphere(); s && s->n != n)
        throw WrongDimensionError("standard sphere target has n = " + std::to_string(s->n) +
                                  " but b_bound was called with n = " + std::to_string(n));
    if (probe.m_min < 0 || probe.m_max <= probe.m_min)
        throw InvariantError("probe range needs 0 <= m_min < m_max");
    std::size_t window = 2 * n - 1;
    BBoundReport report{Dim(0), false, probe, window};
    long long best = -1;
    long long best_at = probe.m_min;
    for (long long m = probe.m_min; m <= probe.m_max; ++m) {
        long long sum = 0;
        for (std::size_t i = 0; i < window; ++i) {
            Dim d = target.dim(m + static_cast<long long>(i));
            if (!d) {
                report.value = std::nullopt;
                report.stabilized = true;  // limsup is definitively infinite
                return report;
            }
            sum += *d;
        }
        if (sum > best) {
            best = sum;
            best_at = m;
        }
    }
    report.value = best;
    long long midpoint = probe.m_min + (probe.m_max - probe.m_min) / 2;
    report.stabilized = best_at <= midpoint;
    return report;
}

EvenCountReport even_count_check(const OrbitSystem& system, const TargetHomology& target,
                                 const ProbeRange& probe) {
    EvenCountReport report{0, b_bound(target, system.n(), probe), true};
    for (const SimpleOrbit& orbit : system.orbits())
        if (is_even(orbit)) ++report.even_orbits;
    if (report.bound.value)
        report.pass = static_cast<long long>(report.even_orbits) <= *report.bound.value;
    return report;
}

OrbitSystem ellipsoid(const std::vector<Rational>& semiaxes, bool declare_irrational) {
    std::size_t n = semiaxes.size();
    if (n < 2) throw InvariantError("ellipsoid needs at least two semiaxes");
    for (std::size_t i = 0; i < n; ++i) {
        if (semiaxes[i].sign() <= 0)
            throw InvariantError("semiaxis " + std::to_string(i + 1) + " must be positive");
        for (std::size_t j = i + 1; j < n; ++j)
            if (semiaxes[i] == semiaxes[j])
                throw RepeatedSemiaxisError("semiaxes " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " coincide (" +
                                            semiaxes[i].str() + ")");
    }
    std::vector<SimpleOrbit> orbits;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Block> blocks;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            blocks.push_back(Block::elliptic(semiaxes[j] / semiaxes[i], declare_irrational));
        }
        orbits.emplace_back("x" + std::to_string(j + 1), semiaxes[j],
                            OrbitLinearization(std::move(blocks), 2));
    }
    return OrbitSystem(n, std::move(orbits));
}

}  // namespace reebcalc
