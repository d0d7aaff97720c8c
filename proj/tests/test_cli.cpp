#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

std::string cli_path() {
    const char* path = std::getenv("REEBCALC_CLI");
    REQUIRE_MESSAGE(path != nullptr, "REEBCALC_CLI must point at the built binary");
    return path;
}

std::string tmp_dir() {
    const char* dir = std::getenv("REEBCALC_TMP");
    return dir ? dir : ".";
}

RunResult run(const std::string& args) {
    std::string command = "'" + cli_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = tmp_dir() + "/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

std::string squeeze(const std::string& text) {
    std::string out;
    bool in_space = false;
    for (char c : text) {
        if (c == ' ' || c == '\t') {
            if (!in_space) out += ' ';
            in_space = true;
        } else {
            out += c;
            in_space = false;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("ellipsoid then spectrum") {
    std::string sys = tmp_dir() + "/sys_e52.json";
    RunResult build = run("ellipsoid 1 5/2 --out '" + sys + "'");
    CHECK(build.exit_code == 0);

    RunResult spectrum = run("spectrum '" + sys + "' --max-degree 10");
    CHECK(spectrum.exit_code == 0);
    CHECK(spectrum.output.find("degree") != std::string::npos);
    std::string squeezed = squeeze(spectrum.output);
    for (const char* row : {"2 x1 1 1 3", "4 x1 2 2 5", "6 x2 1 5/2 7", "8 x1 3 3 9",
                            "10 x1 4 4 11"})
        CHECK(squeezed.find(row) != std::string::npos);

    // byte-identical reruns
    RunResult again = run("spectrum '" + sys + "' --max-degree 10");
    CHECK(again.output == spectrum.output);

    RunResult json = run("spectrum '" + sys + "' --max-degree 10 --json");
    auto doc = nlohmann::json::parse(json.output);
    CHECK(doc["degrees"].size() == 5);

    RunResult by_action = run("spectrum '" + sys + "' --max-action 4 --json");
    auto action_doc = nlohmann::json::parse(by_action.output);
    CHECK(action_doc["cutoff"]["by_action"] == "4");
    CHECK(action_doc["degrees"].size() == 5);  // same iterates for E(1, 5/2)

    // reports honor --out
    std::string report = tmp_dir() + "/res_out.json";
    CHECK(run("resonance '" + sys + "' --json --out '" + report + "'").exit_code == 0);
    std::ifstream in(report);
    REQUIRE(in.good());
    auto res_doc = nlohmann::json::parse(in);
    CHECK(res_doc["lhs"] == "1/2");
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run("spectrum").exit_code == 2);
    CHECK(run("nonsense-command").exit_code == 2);

    std::string bad = write_file("bad_action.json", R"({
      "schema_version": 1, "n": 2,
      "orbits": [{"name": "x", "action": "0",
                  "blocks": [{"type": "elliptic", "theta": "1/2"}]}]
    })");
    RunResult r = run("spectrum '" + bad + "' --max-degree 4");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("$.orbits[0].action") != std::string::npos);
}

TEST_CASE("cluster output and exit codes") {
    RunResult ok = run("cluster --deltas 14/5,7 --epsilon 1/10 --bound 100");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("k = (5, 2), spread = 0") != std::string::npos);

    RunResult infeasible = run("odd-cluster --deltas 14/5,7 --epsilon 1 --bound 10000");
    CHECK(infeasible.exit_code == 3);
    CHECK(infeasible.output.find("infeasible_within_bound") != std::string::npos);
    CHECK(infeasible.output.find("7/5") != std::string::npos);

    RunResult odd = run("odd-cluster --deltas 14/5,7 --epsilon 3/2 --bound 100");
    CHECK(odd.exit_code == 0);
    CHECK(odd.output.find("k = (3, 1), spread = 7/5") != std::string::npos);
}

TEST_CASE("verdict commands: exit 0 on pass, 1 on fail") {
    std::string sys = tmp_dir() + "/sys_check.json";
    run("ellipsoid 1 5/2 --out '" + sys + "'");
    std::string sphere = write_file("sphere2.json", R"({"kind": "standard_sphere", "n": 2})");
    std::string zero = write_file("zero.json", R"({"kind": "table", "dims": {}})");

    CHECK(run("perfect-check '" + sys + "' --target '" + sphere + "' --max-degree 10").exit_code ==
          0);
    CHECK(run("perfect-check '" + sys + "' --target '" + zero + "' --max-degree 10").exit_code ==
          1);
    CHECK(run("resonance '" + sys + "'").exit_code == 0);
    CHECK(run("ratios '" + sys + "'").exit_code == 0);
    CHECK(run("geom-perfect '" + sys + "' --max-degree 10").exit_code == 0);
    CHECK(run("ordering '" + sys + "' --max-degree 10").exit_code == 0);
    CHECK(run("even-count '" + sys + "' --target '" + sphere +
              "' --probe-min 0 --probe-max 50")
              .exit_code == 0);

    RunResult resonance = run("resonance '" + sys + "'");
    CHECK(resonance.output.find("lhs = 1/2") != std::string::npos);
}

TEST_CASE("domain errors exit 3") {
    std::string sys = write_file("degenerate.json", R"({
      "schema_version": 1, "n": 2,
      "orbits": [{"name": "x", "action": "1",
                  "blocks": [{"type": "elliptic", "theta": "1/3"}]}]
    })");
    RunResult r = run("spectrum '" + sys + "' --max-degree 4");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("degenerate_iterate") != std::string::npos);
}

TEST_CASE("classify and census") {
    std::string consistent = write_file("cfg_ok.json", R"({
      "mode": "perfect",
      "entries": [{"type": "elliptic", "delta": "14/5", "irrational": true},
                  {"type": "elliptic", "delta": "7", "irrational": true}]
    })");
    RunResult ok = run("classify-s3 '" + consistent + "'");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("Consistent") != std::string::npos);

    std::string ruled = write_file("cfg_bad.json", R"({
      "mode": "exact",
      "entries": [{"type": "pos_hyperbolic", "mu": 4}, {"type": "neg_hyperbolic", "mu": 3}]
    })");
    RunResult bad = run("classify-s3 '" + ruled + "'");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("R7") != std::string::npos);
    CHECK(bad.output.find("fired") != std::string::npos);

    // --mode overrides the document
    RunResult forced = run("classify-s3 '" + ruled + "' --mode perfect");
    CHECK(forced.exit_code == 1);
    CHECK(forced.output.find("R1") != std::string::npos);

    RunResult census = run("census-s3 --mu-max 5 --denom-max 4 --entries 2 --mode perfect");
    CHECK(census.exit_code == 0);
    CHECK(census.output.find("consistent") != std::string::npos);
}

TEST_CASE("witness ellipsoid and counting and bound-b") {
    RunResult w = run("witness-ellipsoid --delta1 14/5");
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("a = (1, 5/2), delta2 = 7") != std::string::npos);
    CHECK(run("witness-ellipsoid --delta1 2").exit_code == 3);

    std::string sys = tmp_dir() + "/sys_count.json";
    run("ellipsoid 1 2584/1597 --out '" + sys + "'");
    RunResult counting = run("counting '" + sys + "' --orbits x1,x2 --k-max 500");
    CHECK(counting.exit_code == 0);
    CHECK(counting.output.find("max |by_action - by_index|") != std::string::npos);

    std::string sphere = write_file("sphere3.json", R"({"kind": "standard_sphere", "n": 3})");
    RunResult b = run("bound-b --target '" + sphere + "' --n 3 --probe-min 0 --probe-max 50");
    CHECK(b.exit_code == 0);
    CHECK(b.output.find("b = 3 (stabilized") != std::string::npos);
}

TEST_CASE("decimal tolerance opt-in") {
    std::string sys = write_file("decimal.json", R"({
      "schema_version": 1, "n": 2,
      "orbits": [
        {"name": "x", "action": "1", "shift": 2,
         "blocks": [{"type": "elliptic", "theta": "0.4"}]},
        {"name": "y", "action": "2.5", "shift": 2,
         "blocks": [{"type": "elliptic", "theta": "2.5"}]}
      ]
    })");
    CHECK(run("resonance '" + sys + "'").exit_code == 2);
    RunResult ok = run("resonance '" + sys + "' --decimal-tolerance 1/1000000");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("holds") != std::string::npos);
}
