// Python bindings: thin JSON-string surface over the core operations. The
// reebcalc python package converts to and from dicts on its side, so the
// binding layer stays free of object-model coupling.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reebcalc/errors.hpp"
#include "reebcalc/io.hpp"

namespace py = pybind11;
using namespace reebcalc;
using reebcalc::io::Json;

namespace {

std::vector<Rational> parse_deltas(const std::vector<std::string>& deltas) {
    std::vector<Rational> out;
    for (const std::string& d : deltas) out.push_back(Rational::parse(d));
    return out;
}

Parity parity_of(const std::string& parity) {
    if (parity == "any") return Parity::Any;
    if (parity == "all_odd") return Parity::AllOdd;
    throw ParseError("parity must be \"any\" or \"all_odd\", got '" + parity + "'");
}

S3Mode mode_of(const std::string& mode) {
    if (mode == "perfect") return S3Mode::AssumePerfect;
    if (mode == "exact") return S3Mode::AssumeExactOrbitSet;
    throw ParseError("mode must be \"perfect\" or \"exact\", got '" + mode + "'");
}

OrbitSystem system_of(const std::string& json) {
    return io::orbit_system_from_json(io::parse_json_text(json));
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Conley-Zehnder / contact-homology calculus (JSON-string API)";

    py::register_exception<Error>(m, "DomainError");
    py::register_exception<ParseError>(m, "InputError");

    m.def("ellipsoid",
          [](const std::vector<std::string>& axes, bool irrational) {
              std::vector<Rational> parsed;
              for (const std::string& a : axes) parsed.push_back(Rational::parse(a));
              return dump(io::orbit_system_to_json(ellipsoid(parsed, irrational)));
          },
          py::arg("axes"), py::arg("irrational") = false);

    m.def("spectrum",
          [](const std::string& system, long long max_degree, const std::string& max_action) {
              Cutoff cutoff = max_action.empty() ? Cutoff{ByDegree{max_degree}}
                                                 : Cutoff{ByAction{Rational::parse(max_action)}};
              return dump(io::to_json(enumerate_iterates(system_of(system), cutoff)));
          },
          py::arg("system"), py::arg("max_degree") = 0, py::arg("max_action") = "");

    m.def("perfect_check",
          [](const std::string& system, const std::string& target, long long max_degree) {
              return dump(io::to_json(perfection_check(
                  system_of(system), io::target_from_json(io::parse_json_text(target)),
                  max_degree)));
          },
          py::arg("system"), py::arg("target"), py::arg("max_degree"));

    m.def("geom_perfect",
          [](const std::string& system, long long max_degree) {
              return dump(io::to_json(geometric_perfectness(system_of(system), max_degree)));
          },
          py::arg("system"), py::arg("max_degree"));

    m.def("resonance",
          [](const std::string& system) {
              return dump(io::to_json(resonance_identity(system_of(system))));
          },
          py::arg("system"));

    m.def("ratios",
          [](const std::string& system) {
              return dump(io::to_json(ratio_table(system_of(system))));
          },
          py::arg("system"));

    m.def("counting",
          [](const std::string& system, const std::string& x, const std::string& y,
             long long k_max) {
              OrbitSystem sys = system_of(system);
              return dump(io::to_json(counting_diagnostic(sys.orbit(x), sys.orbit(y), k_max)));
          },
          py::arg("system"), py::arg("x"), py::arg("y"), py::arg("k_max"));

    m.def("ordering",
          [](const std::string& system, long long max_degree) {
              return dump(io::to_json(action_degree_ordering(system_of(system), max_degree)));
          },
          py::arg("system"), py::arg("max_degree"));

    m.def("cluster",
          [](const std::vector<std::string>& deltas, const std::string& epsilon, long long bound,
             const std::string& parity) {
              ClusterQuery query{parse_deltas(deltas), Rational::parse(epsilon), bound,
                                 parity_of(parity)};
              ClusterSolution solution =
                  query.parity == Parity::AllOdd ? odd_cluster(query) : cluster(query);
              return dump(io::to_json(query, solution));
          },
          py::arg("deltas"), py::arg("epsilon"), py::arg("bound"), py::arg("parity") = "any");

    m.def("brute_oracle",
          [](const std::vector<std::string>& deltas, const std::string& epsilon, long long bound,
             const std::string& parity) {
              ClusterQuery query{parse_deltas(deltas), Rational::parse(epsilon), bound,
                                 parity_of(parity)};
              return dump(io::to_json(query, brute_oracle(query)));
          },
          py::arg("deltas"), py::arg("epsilon"), py::arg("bound"), py::arg("parity") = "any");

    m.def("verify_window",
          [](const std::string& system, const std::vector<long long>& k,
             const std::string& epsilon) {
              return dump(io::to_json(
                  verify_window(system_of(system), k, Rational::parse(epsilon))));
          },
          py::arg("system"), py::arg("k"), py::arg("epsilon"));

    m.def("verify_window_abstract",
          [](const std::vector<std::string>& deltas, const std::vector<long long>& k,
             const std::string& epsilon) {
              return dump(io::to_json(
                  verify_window_abstract(parse_deltas(deltas), k, Rational::parse(epsilon))));
          },
          py::arg("deltas"), py::arg("k"), py::arg("epsilon"));

    m.def("bound_b",
          [](const std::string& target, std::size_t n, long long m_min, long long m_max) {
              return dump(io::to_json(b_bound(io::target_from_json(io::parse_json_text(target)),
                                              n, {m_min, m_max})));
          },
          py::arg("target"), py::arg("n"), py::arg("m_min"), py::arg("m_max"));

    m.def("even_count",
          [](const std::string& system, const std::string& target, long long m_min,
             long long m_max) {
              return dump(io::to_json(even_count_check(
                  system_of(system), io::target_from_json(io::parse_json_text(target)),
                  {m_min, m_max})));
          },
          py::arg("system"), py::arg("target"), py::arg("m_min"), py::arg("m_max"));

    m.def("classify_s3",
          [](const std::string& config, const std::string& mode, long long bound) {
              std::optional<S3Mode> forced;
              if (!mode.empty()) forced = mode_of(mode);
              return dump(io::to_json(
                  classify(io::s3_config_from_json(io::parse_json_text(config), forced), bound)));
          },
          py::arg("config"), py::arg("mode") = "", py::arg("bound") = kDefaultS3SearchBound);

    m.def("census_s3",
          [](const std::string& mode, int entries, long long mu_max, long long denom_max,
             long long bound) {
              return dump(io::to_json(
                  enumerate_small_configs(mode_of(mode), entries, mu_max, denom_max, bound)));
          },
          py::arg("mode"), py::arg("entries"), py::arg("mu_max"), py::arg("denom_max"),
          py::arg("bound") = kDefaultS3SearchBound);

    m.def("witness_ellipsoid",
          [](const std::string& delta1) {
              return dump(io::to_json(witness_ellipsoid(Rational::parse(delta1))));
          },
          py::arg("delta1"));

    m.def("cz_index",
          [](const std::string& system, const std::string& orbit, long long k) {
              return cz_index(system_of(system).orbit(orbit), k);
          },
          py::arg("system"), py::arg("orbit"), py::arg("k"));

    m.def("mean_index",
          [](const std::string& system, const std::string& orbit, long long k) {
              return mean_index(system_of(system).orbit(orbit), k).str();
          },
          py::arg("system"), py::arg("orbit"), py::arg("k") = 1);

    m.def("degree",
          [](const std::string& system, const std::string& orbit, long long k) {
              OrbitSystem sys = system_of(system);
              return degree(sys.orbit(orbit), k, sys.n());
          },
          py::arg("system"), py::arg("orbit"), py::arg("k"));
}
