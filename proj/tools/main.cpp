// reebcalc: exact index/action calculus for non-degenerate Reeb orbit data.
//
// Exit codes: 0 verdict pass / report printed, 1 verdict fail / RuledOut,
// 2 usage or parse error, 3 domain error (degenerate iterate, infeasible
// bound, guard exceeded, ...).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "reebcalc/errors.hpp"
#include "reebcalc/io.hpp"

using namespace reebcalc;
using reebcalc::io::Json;

namespace {

struct CommonOpts {
    bool json = false;
    std::string out;
    std::string decimal_tolerance;
};

std::optional<Rational> tolerance_of(const CommonOpts& opts) {
    if (opts.decimal_tolerance.empty()) return std::nullopt;
    return Rational::parse(opts.decimal_tolerance);
}

void emit(const CommonOpts& opts, const Json& doc, const std::string& text) {
    std::string payload = opts.json ? doc.dump(2) + "\n" : text;
    if (!opts.out.empty()) {
        std::ofstream f(opts.out);
        if (!f) throw ParseError("cannot write '" + opts.out + "'");
        f << payload;
    } else {
        std::cout << payload;
    }
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

OrbitSystem load_system(const std::string& path, const CommonOpts& opts) {
    return io::orbit_system_from_json(io::load_json_file(path), !opts.decimal_tolerance.empty());
}

TargetHomology load_target(const std::string& path, const CommonOpts& opts) {
    return io::target_from_json(io::load_json_file(path), !opts.decimal_tolerance.empty());
}

std::vector<Rational> parse_deltas(const std::string& csv) {
    std::vector<Rational> deltas;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) deltas.push_back(Rational::parse(item));
    if (deltas.empty()) throw ParseError("--deltas needs at least one value");
    return deltas;
}

std::string k_list(const std::vector<long long>& k) {
    std::string out = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(k[i]);
    }
    return out + ")";
}

int run_cluster(const std::string& deltas_csv, const std::string& epsilon, long long bound,
                Parity parity, const CommonOpts& opts) {
    ClusterQuery query{parse_deltas(deltas_csv), Rational::parse(epsilon), bound, parity};
    ClusterSolution solution = parity == Parity::AllOdd ? odd_cluster(query) : cluster(query);
    std::ostringstream text;
    text << "k = " << k_list(solution.k) << ", spread = " << solution.spread.str()
         << (solution.exact_path ? "  [exact common-multiple path]" : "") << "\n";
    emit(opts, io::to_json(query, solution), text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Conley-Zehnder / contact-homology calculus for Reeb orbit data"};
    app.require_subcommand(1);

    CommonOpts opts;
    int exit_code = 0;

    auto add_common = [&opts](CLI::App* cmd, bool with_tolerance = true) {
        cmd->add_flag("--json", opts.json, "emit a machine-readable JSON report");
        cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
        if (with_tolerance)
            cmd->add_option("--decimal-tolerance", opts.decimal_tolerance,
                            "accept decimal literals in input files (converted exactly) and "
                            "compare identities within this tolerance, \"p/q\"");
    };

    // ellipsoid
    std::vector<std::string> axes;
    bool irrational = false;
    auto* cmd_ellipsoid = app.add_subcommand("ellipsoid", "build the model ellipsoid orbit system");
    cmd_ellipsoid->add_option("axes", axes, "semiaxes a1 a2 ... an, rationals \"p/q\"")->required();
    cmd_ellipsoid->add_flag("--irrational", irrational,
                            "declare the rotation witnesses irrational");
    add_common(cmd_ellipsoid, false);
    cmd_ellipsoid->callback([&] {
        std::vector<Rational> parsed;
        for (const std::string& a : axes) parsed.push_back(Rational::parse(a));
        Json doc = io::orbit_system_to_json(ellipsoid(parsed, irrational));
        emit(opts, doc, doc.dump(2) + "\n");
    });

    // spectrum
    std::string system_path, target_path;
    long long max_degree = 0;
    std::string max_action;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "good-iterate degree spectrum");
    cmd_spectrum->add_option("system", system_path, "orbit system document")->required();
    auto* deg_opt = cmd_spectrum->add_option("--max-degree", max_degree, "degree cutoff");
    auto* act_opt = cmd_spectrum->add_option("--max-action", max_action, "action cutoff \"p/q\"");
    deg_opt->excludes(act_opt);
    add_common(cmd_spectrum);
    cmd_spectrum->callback([&] {
        if (deg_opt->count() == 0 && act_opt->count() == 0)
            throw CLI::RequiredError("--max-degree or --max-action");
        OrbitSystem sys = load_system(system_path, opts);
        Cutoff cutoff = act_opt->count() ? Cutoff{ByAction{Rational::parse(max_action)}}
                                         : Cutoff{ByDegree{max_degree}};
        DegreeSpectrum spectrum = enumerate_iterates(sys, cutoff);
        std::vector<std::vector<std::string>> rows{{"degree", "orbit", "k", "action", "cz"}};
        for (const auto& [d, refs] : spectrum.degrees)
            for (const IterateRef& r : refs)
                rows.push_back({std::to_string(d), r.orbit, std::to_string(r.k), r.action.str(),
                                std::to_string(r.cz)});
        emit(opts, io::to_json(spectrum), render_table(rows));
    });

    // perfect-check
    auto* cmd_perfect = app.add_subcommand("perfect-check",
                                           "compare the spectrum against a target homology");
    cmd_perfect->add_option("system", system_path, "orbit system document")->required();
    cmd_perfect->add_option("--target", target_path, "target homology document")->required();
    cmd_perfect->add_option("--max-degree", max_degree, "degree cutoff")->required();
    add_common(cmd_perfect);
    cmd_perfect->callback([&] {
        PerfectionReport report =
            perfection_check(load_system(system_path, opts), load_target(target_path, opts),
                             max_degree);
        std::ostringstream text;
        text << (report.perfect_up_to_cutoff ? "Perfect-up-to-cutoff" : "Mismatch") << " (degree <= "
             << max_degree << ")\n";
        std::vector<std::vector<std::string>> rows{{"degree", "count", "target"}};
        for (const PerfectionMismatch& m : report.mismatches)
            rows.push_back({std::to_string(m.degree), std::to_string(m.count),
                            m.target_dim ? std::to_string(*m.target_dim) : "inf"});
        if (rows.size() > 1) text << render_table(rows);
        emit(opts, io::to_json(report), text.str());
        exit_code = report.perfect_up_to_cutoff ? 0 : 1;
    });

    // geom-perfect
    auto* cmd_geom = app.add_subcommand("geom-perfect",
                                        "per-homotopy-class index parity check");
    cmd_geom->add_option("system", system_path, "orbit system document")->required();
    cmd_geom->add_option("--max-degree", max_degree, "degree cutoff")->required();
    add_common(cmd_geom);
    cmd_geom->callback([&] {
        GeometricPerfectnessReport report =
            geometric_perfectness(load_system(system_path, opts), max_degree);
        std::ostringstream text;
        text << (report.geometrically_perfect ? "geometrically perfect (up to cutoff)"
                                              : "parity mismatch inside a homotopy class")
             << "\n";
        emit(opts, io::to_json(report), text.str());
        exit_code = report.geometrically_perfect ? 0 : 1;
    });

    // resonance
    auto* cmd_resonance = app.add_subcommand("resonance", "exact resonance identity for n = 2");
    cmd_resonance->add_option("system", system_path, "orbit system document")->required();
    add_common(cmd_resonance);
    cmd_resonance->callback([&] {
        ResonanceReport report =
            resonance_identity(load_system(system_path, opts), tolerance_of(opts));
        std::vector<std::vector<std::string>> rows{
            {"orbit", "sigma", "Delta", "weight", "contribution"}};
        for (const ResonanceTerm& t : report.terms)
            rows.push_back({t.orbit, t.sigma > 0 ? "+1" : "-1", t.delta.str(), t.weight.str(),
                            t.contribution.str()});
        std::ostringstream text;
        text << render_table(rows) << "lhs = " << report.lhs.str() << ", expected 1/2 -> "
             << (report.verdict ? "holds" : "fails") << "\n";
        emit(opts, io::to_json(report), text.str());
        exit_code = report.verdict ? 0 : 1;
    });

    // ratios
    auto* cmd_ratios = app.add_subcommand("ratios", "mean-index-to-action ratio table");
    cmd_ratios->add_option("system", system_path, "orbit system document")->required();
    add_common(cmd_ratios);
    cmd_ratios->callback([&] {
        RatioReport report = ratio_table(load_system(system_path, opts), tolerance_of(opts));
        std::vector<std::vector<std::string>> rows{{"orbit", "Delta", "action", "Delta/action"}};
        for (const RatioRow& r : report.rows)
            rows.push_back({r.orbit, r.delta.str(), r.action.str(), r.ratio.str()});
        std::ostringstream text;
        text << render_table(rows)
             << (report.all_equal ? "all ratios equal" : "ratios differ") << "\n";
        emit(opts, io::to_json(report), text.str());
        exit_code = report.all_equal ? 0 : 1;
    });

    // counting
    std::string orbit_pair;
    long long k_max = 0;
    auto* cmd_counting = app.add_subcommand("counting",
                                            "two-way action/index iterate counting diagnostic");
    cmd_counting->add_option("system", system_path, "orbit system document")->required();
    cmd_counting->add_option("--orbits", orbit_pair, "pair of orbit names, e.g. x1,x2")->required();
    cmd_counting->add_option("--k-max", k_max, "iterate horizon")->required();
    add_common(cmd_counting);
    cmd_counting->callback([&] {
        auto comma = orbit_pair.find(',');
        if (comma == std::string::npos) throw ParseError("--orbits expects two names: x,y");
        OrbitSystem sys = load_system(system_path, opts);
        CountingReport report = counting_diagnostic(sys.orbit(orbit_pair.substr(0, comma)),
                                                    sys.orbit(orbit_pair.substr(comma + 1)), k_max);
        std::ostringstream text;
        text << "max |by_action - by_index| = " << report.max_discrepancy << " over k <= "
             << report.k_max << "\n";
        emit(opts, io::to_json(report), text.str());
    });

    // ordering
    auto* cmd_ordering = app.add_subcommand("ordering",
                                            "action vs degree ordering consistency check");
    cmd_ordering->add_option("system", system_path, "orbit system document")->required();
    cmd_ordering->add_option("--max-degree", max_degree, "degree cutoff")->required();
    add_common(cmd_ordering);
    cmd_ordering->callback([&] {
        OrderingReport report = action_degree_ordering(load_system(system_path, opts), max_degree);
        std::vector<std::vector<std::string>> rows{{"degree", "action"}};
        for (const auto& [d, a] : report.actions_by_degree)
            rows.push_back({std::to_string(d), a.str()});
        std::ostringstream text;
        text << render_table(rows)
             << (report.strictly_increasing ? "actions strictly increase with degree"
                                            : "ordering violated")
             << "\n";
        if (report.violation)
            text << "violation: degree " << report.violation->degree_low << " has action "
                 << report.violation->action_low.str() << " >= action "
                 << report.violation->action_high.str() << " at degree "
                 << report.violation->degree_high << "\n";
        emit(opts, io::to_json(report), text.str());
        exit_code = report.strictly_increasing ? 0 : 1;
    });

    // cluster / odd-cluster
    std::string deltas_csv, epsilon;
    long long bound = 0;
    auto* cmd_cluster = app.add_subcommand("cluster",
                                           "simultaneous mean-index clustering (any parity)");
    cmd_cluster->add_option("--deltas", deltas_csv, "comma-separated mean indices")->required();
    cmd_cluster->add_option("--epsilon", epsilon, "spread bound \"p/q\"")->required();
    cmd_cluster->add_option("--bound", bound, "search horizon on k_1")->required();
    add_common(cmd_cluster);
    cmd_cluster->callback([&] { exit_code = run_cluster(deltas_csv, epsilon, bound, Parity::Any, opts); });

    auto* cmd_odd = app.add_subcommand("odd-cluster",
                                       "clustering with all multipliers odd (Kronecker step)");
    cmd_odd->add_option("--deltas", deltas_csv, "comma-separated mean indices")->required();
    cmd_odd->add_option("--epsilon", epsilon, "spread bound \"p/q\"")->required();
    cmd_odd->add_option("--bound", bound, "search horizon on m = (k_1 - 1)/2")->required();
    add_common(cmd_odd);
    cmd_odd->callback([&] { exit_code = run_cluster(deltas_csv, epsilon, bound, Parity::AllOdd, opts); });

    // bound-b
    long long n_param = 0, probe_min = 0, probe_max = 0;
    auto* cmd_bound = app.add_subcommand("bound-b", "sliding-window homology bound b");
    cmd_bound->add_option("--target", target_path, "target homology document")->required();
    cmd_bound->add_option("--n", n_param, "ambient parameter n (window 2n-1)")->required();
    cmd_bound->add_option("--probe-min", probe_min, "probe range start")->required();
    cmd_bound->add_option("--probe-max", probe_max, "probe range end")->required();
    add_common(cmd_bound);
    cmd_bound->callback([&] {
        BBoundReport report = b_bound(load_target(target_path, opts),
                                      static_cast<std::size_t>(n_param), {probe_min, probe_max});
        std::ostringstream text;
        text << "b = " << (report.value ? std::to_string(*report.value) : "infinite")
             << (report.stabilized ? " (stabilized" : " (NOT stabilized") << " over probe ["
             << probe_min << ", " << probe_max << "], window " << report.window_length << ")\n";
        emit(opts, io::to_json(report), text.str());
    });

    // even-count
    auto* cmd_even = app.add_subcommand("even-count", "even simple orbits vs the bound b");
    cmd_even->add_option("system", system_path, "orbit system document")->required();
    cmd_even->add_option("--target", target_path, "target homology document")->required();
    cmd_even->add_option("--probe-min", probe_min, "probe range start")->required();
    cmd_even->add_option("--probe-max", probe_max, "probe range end")->required();
    add_common(cmd_even);
    cmd_even->callback([&] {
        EvenCountReport report = even_count_check(load_system(system_path, opts),
                                                  load_target(target_path, opts),
                                                  {probe_min, probe_max});
        std::ostringstream text;
        text << "r = " << report.even_orbits << " even simple orbits, b = "
             << (report.bound.value ? std::to_string(*report.bound.value) : "infinite") << " -> "
             << (report.pass ? "pass" : "fail (refutes perfectness of the system)") << "\n";
        emit(opts, io::to_json(report), text.str());
        exit_code = report.pass ? 0 : 1;
    });

    // classify-s3
    std::string config_path, mode_flag;
    long long search_bound = kDefaultS3SearchBound;
    auto* cmd_classify = app.add_subcommand("classify-s3",
                                            "rule-based classification of an S^3 configuration");
    cmd_classify->add_option("config", config_path, "configuration document")->required();
    cmd_classify->add_option("--mode", mode_flag, "override the document mode: perfect|exact")
        ->check(CLI::IsMember({"perfect", "exact"}));
    cmd_classify->add_option("--bound", search_bound, "witness search bound (default 10000)");
    add_common(cmd_classify);
    cmd_classify->callback([&] {
        std::optional<S3Mode> mode;
        if (!mode_flag.empty())
            mode = mode_flag == "perfect" ? S3Mode::AssumePerfect : S3Mode::AssumeExactOrbitSet;
        S3Configuration config = io::s3_config_from_json(io::load_json_file(config_path), mode);
        S3Verdict verdict = classify(config, search_bound);
        std::ostringstream text;
        text << (verdict.consistent ? "Consistent" : "RuledOut") << " (search bound "
             << verdict.search_bound << ")\n";
        for (const TraceEntry& t : verdict.trace) {
            text << "  " << t.rule << " [" << io::status_name(t.status);
            if (t.basis) text << ": " << io::basis_name(*t.basis);
            text << "] " << t.citation << "\n";
            if (!t.note.empty()) text << "       " << t.note << "\n";
        }
        emit(opts, io::to_json(verdict), text.str());
        exit_code = verdict.consistent ? 0 : 1;
    });

    // census-s3
    long long mu_max = 0, denom_max = 0, entries = 2;
    auto* cmd_census = app.add_subcommand("census-s3",
                                          "exhaustive desk-scale configuration census");
    cmd_census->add_option("--mu-max", mu_max, "largest hyperbolic index / witness value")->required();
    cmd_census->add_option("--denom-max", denom_max, "largest witness denominator")->required();
    cmd_census->add_option("--entries", entries, "maximum entries per configuration (<= 3)");
    cmd_census->add_option("--mode", mode_flag, "perfect|exact")
        ->check(CLI::IsMember({"perfect", "exact"}))
        ->required();
    cmd_census->add_option("--bound", search_bound, "witness search bound (default 10000)");
    add_common(cmd_census);
    cmd_census->callback([&] {
        S3Mode mode = mode_flag == "perfect" ? S3Mode::AssumePerfect : S3Mode::AssumeExactOrbitSet;
        S3Census census = enumerate_small_configs(mode, static_cast<int>(entries), mu_max,
                                                  denom_max, search_bound);
        std::ostringstream text;
        text << census.total << " configurations, " << census.consistent.size() << " consistent\n";
        std::vector<std::vector<std::string>> rows{{"rule", "ruled out"}};
        for (const auto& [rule, count] : census.ruled_out_by)
            rows.push_back({rule, std::to_string(count)});
        text << render_table(rows);
        for (const S3Configuration& c : census.consistent) {
            text << "consistent:";
            for (const S3Entry& e : c.entries) text << " " << e.describe();
            text << "\n";
        }
        emit(opts, io::to_json(census), text.str());
    });

    // witness-ellipsoid
    std::string delta1;
    auto* cmd_witness = app.add_subcommand("witness-ellipsoid",
                                           "semiaxes realizing a given first mean index");
    cmd_witness->add_option("--delta1", delta1, "first mean index, > 2, \"p/q\"")->required();
    add_common(cmd_witness);
    cmd_witness->callback([&] {
        WitnessEllipsoid w = witness_ellipsoid(Rational::parse(delta1));
        std::ostringstream text;
        text << "a = (" << w.a1.str() << ", " << w.a2.str() << "), delta2 = " << w.delta2.str()
             << "\n";
        emit(opts, io::to_json(w), text.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
