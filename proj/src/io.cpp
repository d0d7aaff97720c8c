#include "reebcalc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "reebcalc/errors.hpp"

namespace reebcalc::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

void require_object(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown(const Json& obj, const std::string& path,
                    const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key)) fail(path + "." + key, "unknown field");
    }
}

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "." + key, "missing required field");
    return *it;
}

long long int_field(const Json& obj, const std::string& path, const std::string& key) {
    const Json& j = field(obj, path, key);
    if (!j.is_number_integer()) fail(path + "." + key, "expected an integer");
    return j.get<long long>();
}

std::string string_field(const Json& obj, const std::string& path, const std::string& key) {
    const Json& j = field(obj, path, key);
    if (!j.is_string()) fail(path + "." + key, "expected a string");
    return j.get<std::string>();
}

Rational rational_from(const Json& j, const std::string& path, bool allow_decimals) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float())
        fail(path, "floating-point JSON numbers lose exactness; write rationals as "
                   "strings \"p/q\"");
    if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
    try {
        return allow_decimals ? Rational::parse_decimal(j.get<std::string>())
                              : Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Rational rational_field(const Json& obj, const std::string& path, const std::string& key,
                        bool allow_decimals) {
    return rational_from(field(obj, path, key), path + "." + key, allow_decimals);
}

Json rational_json(const Rational& r) { return Json(r.str()); }

Json dim_json(const Dim& d) { return d ? Json(*d) : Json("inf"); }

Dim dim_from(const Json& j, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return std::nullopt;
        fail(path, "expected a non-negative integer or \"inf\"");
    }
    if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(path, "expected a non-negative integer or \"inf\"");
    return j.get<long long>();
}

Block block_from_json(const Json& j, const std::string& path, bool allow_decimals) {
    require_object(j, path);
    std::string type = string_field(j, path, "type");
    if (type == "elliptic") {
        reject_unknown(j, path, {"type", "theta", "irrational"});
        bool irrational = false;
        if (j.contains("irrational")) {
            if (!j["irrational"].is_boolean()) fail(path + ".irrational", "expected a boolean");
            irrational = j["irrational"].get<bool>();
        }
        return Block::elliptic(rational_field(j, path, "theta", allow_decimals), irrational);
    }
    if (type == "pos_hyperbolic") {
        reject_unknown(j, path, {"type", "winding"});
        return Block::positive_hyperbolic(int_field(j, path, "winding"));
    }
    if (type == "neg_hyperbolic") {
        reject_unknown(j, path, {"type", "winding"});
        return Block::negative_hyperbolic(int_field(j, path, "winding"));
    }
    fail(path + ".type", "unknown block type '" + type + "'");
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

OrbitSystem orbit_system_from_json(const Json& doc, bool allow_decimals) {
    require_object(doc, "$");
    reject_unknown(doc, "$", {"schema_version", "n", "orbits"});
    if (int_field(doc, "$", "schema_version") != 1)
        fail("$.schema_version", "unsupported schema version");
    long long n = int_field(doc, "$", "n");
    if (n < 2) fail("$.n", "ambient parameter must be >= 2");
    const Json& orbits = field(doc, "$", "orbits");
    if (!orbits.is_array()) fail("$.orbits", "expected an array");
    std::vector<SimpleOrbit> parsed;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        std::string path = "$.orbits[" + std::to_string(i) + "]";
        const Json& o = orbits[i];
        require_object(o, path);
        reject_unknown(o, path, {"name", "action", "homotopy_class", "shift", "blocks"});
        std::string name = string_field(o, path, "name");
        Rational action = rational_field(o, path, "action", allow_decimals);
        if (action.sign() <= 0) fail(path + ".action", "action must be positive");
        std::string klass = o.contains("homotopy_class")
                                ? string_field(o, path, "homotopy_class")
                                : "contractible";
        long long shift = o.contains("shift") ? int_field(o, path, "shift") : 0;
        const Json& blocks_j = field(o, path, "blocks");
        if (!blocks_j.is_array() || blocks_j.empty())
            fail(path + ".blocks", "expected a non-empty array");
        std::vector<Block> blocks;
        for (std::size_t b = 0; b < blocks_j.size(); ++b)
            blocks.push_back(block_from_json(blocks_j[b],
                                             path + ".blocks[" + std::to_string(b) + "]",
                                             allow_decimals));
        try {
            parsed.emplace_back(name, action, OrbitLinearization(std::move(blocks), shift),
                                HomotopyClass(klass));
        } catch (const InvariantError& e) {
            fail(path, e.what());
        }
    }
    try {
        return OrbitSystem(static_cast<std::size_t>(n), std::move(parsed));
    } catch (const InvariantError& e) {
        fail("$", e.what());
    }
}

Json orbit_system_to_json(const OrbitSystem& system) {
    Json doc;
    doc["schema_version"] = 1;
    doc["n"] = system.n();
    doc["orbits"] = Json::array();
    for (const SimpleOrbit& orbit : system.orbits()) {
        Json o;
        o["name"] = orbit.name();
        o["action"] = rational_json(orbit.action());
        o["homotopy_class"] = orbit.homotopy_class().label();
        o["shift"] = orbit.linearization().shift();
        o["blocks"] = Json::array();
        for (const Block& b : orbit.linearization().blocks()) {
            Json bj;
            switch (b.type()) {
                case Block::Type::Elliptic:
                    bj["type"] = "elliptic";
                    bj["theta"] = rational_json(b.theta());
                    bj["irrational"] = b.declared_irrational();
                    break;
                case Block::Type::PositiveHyperbolic:
                    bj["type"] = "pos_hyperbolic";
                    bj["winding"] = b.winding();
                    break;
                case Block::Type::NegativeHyperbolic:
                    bj["type"] = "neg_hyperbolic";
                    bj["winding"] = b.winding();
                    break;
            }
            o["blocks"].push_back(std::move(bj));
        }
        doc["orbits"].push_back(std::move(o));
    }
    return doc;
}

TargetHomology target_from_json(const Json& doc, bool allow_decimals) {
    require_object(doc, "$");
    std::string kind = string_field(doc, "$", "kind");
    if (kind == "standard_sphere") {
        reject_unknown(doc, "$", {"kind", "n"});
        long long n = int_field(doc, "$", "n");
        if (n < 2) fail("$.n", "ambient parameter must be >= 2");
        return standard_sphere_target(static_cast<std::size_t>(n));
    }
    if (kind == "table") {
        reject_unknown(doc, "$", {"kind", "dims", "tail"});
        TargetHomology::Table table;
        const Json& dims = field(doc, "$", "dims");
        require_object(dims, "$.dims");
        for (const auto& [key, value] : dims.items()) {
            long long degree = 0;
            try {
                degree = std::stoll(key);
            } catch (...) {
                fail("$.dims." + key, "keys must be integer degrees");
            }
            table.dims[degree] = dim_from(value, "$.dims." + key);
        }
        if (doc.contains("tail")) {
            const Json& tail = doc["tail"];
            require_object(tail, "$.tail");
            reject_unknown(tail, "$.tail", {"period", "pattern"});
            TargetHomology::Table::Tail t;
            t.period = int_field(tail, "$.tail", "period");
            const Json& pattern = field(tail, "$.tail", "pattern");
            if (!pattern.is_array()) fail("$.tail.pattern", "expected an array");
            for (std::size_t i = 0; i < pattern.size(); ++i)
                t.pattern.push_back(dim_from(pattern[i], "$.tail.pattern[" + std::to_string(i) + "]"));
            table.tail = std::move(t);
        }
        try {
            return TargetHomology(std::move(table));
        } catch (const Error& e) {
            fail("$", e.what());
        }
    }
    if (kind == "prequantization") {
        reject_unknown(doc, "$", {"kind", "betti", "delta"});
        const Json& betti_j = field(doc, "$", "betti");
        if (!betti_j.is_array()) fail("$.betti", "expected an array");
        std::vector<long long> betti;
        for (std::size_t i = 0; i < betti_j.size(); ++i) {
            if (!betti_j[i].is_number_integer() || betti_j[i].get<long long>() < 0)
                fail("$.betti[" + std::to_string(i) + "]", "expected a non-negative integer");
            betti.push_back(betti_j[i].get<long long>());
        }
        Rational delta = rational_field(doc, "$", "delta", allow_decimals);
        try {
            return prequantization_target(betti, delta);
        } catch (const Error& e) {
            fail("$", e.what());
        }
    }
    fail("$.kind", "unknown target kind '" + kind + "'");
}

S3Configuration s3_config_from_json(const Json& doc, std::optional<S3Mode> mode_override) {
    require_object(doc, "$");
    reject_unknown(doc, "$", {"mode", "entries"});
    S3Mode mode = S3Mode::AssumePerfect;
    if (mode_override) {
        mode = *mode_override;
    } else {
        std::string m = string_field(doc, "$", "mode");
        if (m == "perfect")
            mode = S3Mode::AssumePerfect;
        else if (m == "exact")
            mode = S3Mode::AssumeExactOrbitSet;
        else
            fail("$.mode", "expected \"perfect\" or \"exact\"");
    }
    const Json& entries = field(doc, "$", "entries");
    if (!entries.is_array()) fail("$.entries", "expected an array");
    S3Configuration config{mode, {}};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string path = "$.entries[" + std::to_string(i) + "]";
        const Json& e = entries[i];
        require_object(e, path);
        std::string type = string_field(e, path, "type");
        try {
            if (type == "elliptic") {
                reject_unknown(e, path, {"type", "delta", "irrational"});
                bool irrational = false;
                if (e.contains("irrational")) {
                    if (!e["irrational"].is_boolean()) fail(path + ".irrational", "expected a boolean");
                    irrational = e["irrational"].get<bool>();
                }
                config.entries.push_back(
                    S3Entry::elliptic(rational_field(e, path, "delta", false), irrational));
            } else if (type == "neg_hyperbolic") {
                reject_unknown(e, path, {"type", "mu"});
                config.entries.push_back(S3Entry::neg_hyperbolic(int_field(e, path, "mu")));
            } else if (type == "pos_hyperbolic") {
                reject_unknown(e, path, {"type", "mu"});
                config.entries.push_back(S3Entry::pos_hyperbolic(int_field(e, path, "mu")));
            } else {
                fail(path + ".type", "unknown entry type '" + type + "'");
            }
        } catch (const InvariantError& err) {
            fail(path, err.what());
        }
    }
    return config;
}

Json s3_config_to_json(const S3Configuration& config) {
    Json doc;
    doc["mode"] = mode_name(config.mode);
    doc["entries"] = Json::array();
    for (const S3Entry& e : config.entries) {
        Json ej;
        switch (e.type()) {
            case S3Entry::Type::Elliptic:
                ej["type"] = "elliptic";
                ej["delta"] = rational_json(e.delta());
                ej["irrational"] = e.declared_irrational();
                break;
            case S3Entry::Type::NegHyperbolic:
                ej["type"] = "neg_hyperbolic";
                ej["mu"] = e.mu();
                break;
            case S3Entry::Type::PosHyperbolic:
                ej["type"] = "pos_hyperbolic";
                ej["mu"] = e.mu();
                break;
        }
        doc["entries"].push_back(std::move(ej));
    }
    return doc;
}

Json to_json(const DegreeSpectrum& spectrum) {
    Json doc;
    if (const auto* by_action = std::get_if<ByAction>(&spectrum.cutoff))
        doc["cutoff"] = {{"by_action", rational_json(by_action->max_action)}};
    else
        doc["cutoff"] = {{"by_degree", std::get<ByDegree>(spectrum.cutoff).max_degree}};
    doc["degrees"] = Json::array();
    for (const auto& [degree, refs] : spectrum.degrees) {
        Json row;
        row["degree"] = degree;
        row["iterates"] = Json::array();
        for (const IterateRef& ref : refs)
            row["iterates"].push_back({{"orbit", ref.orbit},
                                       {"k", ref.k},
                                       {"action", rational_json(ref.action)},
                                       {"cz", ref.cz}});
        doc["degrees"].push_back(std::move(row));
    }
    return doc;
}

Json to_json(const PerfectionReport& report) {
    Json doc;
    doc["max_degree"] = report.max_degree;
    doc["verdict"] = report.perfect_up_to_cutoff ? "perfect-up-to-cutoff" : "mismatch";
    doc["mismatches"] = Json::array();
    for (const PerfectionMismatch& m : report.mismatches)
        doc["mismatches"].push_back(
            {{"degree", m.degree}, {"count", m.count}, {"target", dim_json(m.target_dim)}});
    doc["spectrum"] = to_json(report.spectrum);
    return doc;
}

Json to_json(const GeometricPerfectnessReport& report) {
    Json doc;
    doc["verdict"] = report.geometrically_perfect;
    doc["classes"] = Json::array();
    for (const ParityClassReport& c : report.classes) {
        Json row;
        row["class"] = c.klass.label == "contractible"
                           ? Json("contractible")
                           : Json(c.klass.label + "^" + std::to_string(c.klass.exponent));
        row["consistent"] = c.consistent;
        row["members"] = Json::array();
        for (const auto& [ref, parity] : c.members)
            row["members"].push_back(
                {{"orbit", ref.orbit}, {"k", ref.k}, {"cz_parity", parity}});
        doc["classes"].push_back(std::move(row));
    }
    return doc;
}

Json to_json(const BBoundReport& report) {
    Json doc;
    doc["value"] = dim_json(report.value);
    doc["stabilized"] = report.stabilized;
    doc["probe"] = {{"m_min", report.probe.m_min}, {"m_max", report.probe.m_max}};
    doc["window_length"] = report.window_length;
    return doc;
}

Json to_json(const EvenCountReport& report) {
    Json doc;
    doc["even_orbits"] = report.even_orbits;
    doc["b"] = to_json(report.bound);
    doc["pass"] = report.pass;
    if (!report.pass)
        doc["note"] = "failure refutes perfectness of the system, not the bound";
    return doc;
}

Json to_json(const ResonanceReport& report) {
    Json doc;
    doc["lhs"] = rational_json(report.lhs);
    doc["expected"] = rational_json(report.expected);
    doc["residual"] = rational_json(report.residual);
    doc["verdict"] = report.verdict;
    doc["terms"] = Json::array();
    for (const ResonanceTerm& t : report.terms)
        doc["terms"].push_back({{"orbit", t.orbit},
                                {"sigma", t.sigma},
                                {"delta", rational_json(t.delta)},
                                {"weight", rational_json(t.weight)},
                                {"contribution", rational_json(t.contribution)}});
    doc["excluded_nonpositive_mean_index"] = report.excluded;
    return doc;
}

Json to_json(const RatioReport& report) {
    Json doc;
    doc["rows"] = Json::array();
    for (const RatioRow& r : report.rows)
        doc["rows"].push_back({{"orbit", r.orbit},
                               {"delta", rational_json(r.delta)},
                               {"action", rational_json(r.action)},
                               {"ratio", rational_json(r.ratio)}});
    doc["all_equal"] = report.all_equal;
    return doc;
}

Json to_json(const CountingReport& report) {
    Json doc;
    doc["k_max"] = report.k_max;
    doc["max_discrepancy"] = report.max_discrepancy;
    doc["rows"] = Json::array();
    for (const CountingRow& r : report.rows)
        doc["rows"].push_back({{"k", r.k},
                               {"by_action", r.by_action},
                               {"by_index", r.by_index},
                               {"difference", r.difference}});
    return doc;
}

Json to_json(const OrderingReport& report) {
    Json doc;
    doc["verdict"] = report.strictly_increasing;
    doc["actions_by_degree"] = Json::array();
    for (const auto& [degree, action] : report.actions_by_degree)
        doc["actions_by_degree"].push_back({{"degree", degree}, {"action", rational_json(action)}});
    if (report.violation)
        doc["violation"] = {{"degree_low", report.violation->degree_low},
                            {"degree_high", report.violation->degree_high},
                            {"action_low", rational_json(report.violation->action_low)},
                            {"action_high", rational_json(report.violation->action_high)}};
    return doc;
}

Json to_json(const ClusterQuery& query, const ClusterSolution& solution) {
    Json doc;
    Json deltas = Json::array();
    for (const Rational& d : query.deltas) deltas.push_back(rational_json(d));
    doc["deltas"] = std::move(deltas);
    doc["epsilon"] = rational_json(query.epsilon);
    doc["bound"] = query.bound;
    doc["parity"] = query.parity == Parity::AllOdd ? "all_odd" : "any";
    doc["k"] = solution.k;
    doc["spread"] = rational_json(solution.spread);
    doc["exact_path"] = solution.exact_path;
    if (query.parity == Parity::AllOdd) {
        Rational max_delta = query.deltas.front();
        for (const Rational& d : query.deltas) max_delta = std::max(max_delta, d);
        doc["kronecker_delta"] = rational_json(query.epsilon / (Rational(4) * max_delta));
    }
    return doc;
}

Json to_json(const WindowReport& report) {
    Json doc;
    doc["degree_min"] = report.degree_min;
    doc["degree_max"] = report.degree_max;
    doc["window"] = rational_json(report.window);
    doc["fits"] = report.fits;
    return doc;
}

Json to_json(const AbstractWindowReport& report) {
    Json doc;
    doc["span"] = rational_json(report.span);
    doc["epsilon"] = rational_json(report.epsilon);
    doc["fits"] = report.fits;
    return doc;
}

Json to_json(const S3Verdict& verdict) {
    Json doc;
    doc["result"] = verdict.consistent ? "Consistent" : "RuledOut";
    doc["search_bound"] = verdict.search_bound;
    doc["trace"] = Json::array();
    for (const TraceEntry& t : verdict.trace) {
        Json row;
        row["rule"] = t.rule;
        row["status"] = status_name(t.status);
        if (t.basis) row["bound_status"] = basis_name(*t.basis);
        row["citation"] = t.citation;
        if (!t.note.empty()) row["note"] = t.note;
        doc["trace"].push_back(std::move(row));
    }
    return doc;
}

Json to_json(const S3Census& census) {
    Json doc;
    doc["total"] = census.total;
    doc["consistent_count"] = census.consistent.size();
    doc["consistent"] = Json::array();
    for (const S3Configuration& c : census.consistent) doc["consistent"].push_back(s3_config_to_json(c));
    doc["ruled_out_by"] = Json::object();
    for (const auto& [rule, count] : census.ruled_out_by) doc["ruled_out_by"][rule] = count;
    return doc;
}

Json to_json(const WitnessEllipsoid& witness) {
    Json doc;
    doc["a1"] = rational_json(witness.a1);
    doc["a2"] = rational_json(witness.a2);
    doc["delta2"] = rational_json(witness.delta2);
    return doc;
}

std::string mode_name(S3Mode mode) {
    return mode == S3Mode::AssumePerfect ? "perfect" : "exact";
}

std::string status_name(RuleStatus status) {
    switch (status) {
        case RuleStatus::Passed: return "passed";
        case RuleStatus::Fired: return "fired";
        case RuleStatus::Skipped: return "skipped";
        case RuleStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string basis_name(FiringBasis basis) {
    switch (basis) {
        case FiringBasis::Proved: return "proved";
        case FiringBasis::WitnessFound: return "witness-found";
        case FiringBasis::GuaranteedByDensity: return "guaranteed-by-density";
    }
    return "?";
}

}  // namespace reebcalc::io
