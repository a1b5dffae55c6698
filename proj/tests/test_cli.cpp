#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstbell/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = qstbell::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
    const CliRun r = run_cli(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("cli: bell exact emits the full report as json") {
    const json j = run_json({"bell", "exact", "--d", "3", "--json"});
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "bell exact");
    CHECK(j["d"] == 3);
    CHECK(j["quantum_value"].get<double>() ==
          doctest::Approx(3.4641016151377544).epsilon(1e-11));
    CHECK(j["classical_bound"].get<double>() == doctest::Approx(2.0));
    CHECK(j["violation_ratio"].get<double>() ==
          doctest::Approx(1.7320508075688772).epsilon(1e-11));
    REQUIRE(j["table"].is_array());
    CHECK(j["table"].size() == 18);
    CHECK(j["table"][0]["bob"] == "A");
    CHECK(j["table"][0]["joint"].size() == 3);
}

TEST_CASE("cli: game simulate json carries the summary fields") {
    const json j = run_json(
        {"game", "simulate", "--d", "3", "--rounds", "2000", "--seed", "9", "--json"});
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "game simulate");
    CHECK(j["rounds"] == 2000);
    CHECK(j["seed"] == 9);
    CHECK(j["announced"].get<std::uint64_t>() > 0);
    CHECK(j["fire_rate"].get<double>() > 0.2);
    CHECK(j["fire_rate"].get<double>() < 0.5);
    CHECK(j["pass_rate_given_announce"].is_number());
    CHECK(j["std_err_pass"].is_number());
}

TEST_CASE("cli: declined-only run renders undefined rates in text mode") {
    const CliRun r =
        run_cli({"game", "simulate", "--d", "3", "--rounds", "1", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass rate | announced  undefined") != std::string::npos);
    const json j = run_json(
        {"game", "simulate", "--d", "3", "--rounds", "1", "--seed", "3", "--json"});
    CHECK(j["pass_rate_given_announce"].is_null());
}

TEST_CASE("cli: states show reports the shared geometry constants") {
    const json j = run_json({"states", "show", "--d", "3", "--json"});
    CHECK(j["mub_overlap"].get<double>() ==
          doctest::Approx(0.5773502691896258).epsilon(1e-12));
    CHECK(j["control_probability"].get<double>() ==
          doctest::Approx(0.7886751345948129).epsilon(1e-12));
    CHECK(j["normalizer"].get<double>() ==
          doctest::Approx(3.1547005383792515).epsilon(1e-12));
    CHECK(j["fire_probabilities"][0][0].get<double>() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    CHECK(j["basis_a_prime"].size() == 3);
    CHECK(j["intermediates"].size() == 9);
    CHECK(j["steering_vectors"].size() == 9);
}

TEST_CASE("cli: operator command exposes trace and optional spectrum") {
    const json j = run_json({"bell", "operator", "--d", "2", "--eigs", "--json"});
    CHECK(j["dim"] == 4);
    CHECK(j["trace"][0].get<double>() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(j["trace"][1].get<double>() == doctest::Approx(0.0).epsilon(1e-10));
    REQUIRE(j["matrix"].size() == 4); // row-major rows
    CHECK(j["matrix"][0].size() == 4);
    CHECK(j["top_eigenvalue"].get<double>() ==
          doctest::Approx(2.8284271247461903).epsilon(1e-9));
    CHECK(j["entangled_fidelity"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
    // without the flag the spectrum keys stay absent
    const json plain = run_json({"bell", "operator", "--d", "2", "--json"});
    CHECK_FALSE(plain.contains("top_eigenvalue"));
}

TEST_CASE("cli: lhv enumerate reports bound, argmax and scan size") {
    const json j = run_json({"bell", "lhv", "--d", "2", "--json"});
    CHECK(j["mode"] == "enumerate");
    CHECK(j["max_value"] == 2);
    CHECK(j["strategies_scanned"] == 64);
    CHECK(j["argmax"]["a"] == 0);
    CHECK(j["argmax"]["a_prime"] == 0);
    REQUIRE(j["argmax"]["fires"].size() == 1);
    CHECK(j["argmax"]["fires"][0][0] == 0);
    CHECK(j["argmax"]["fires"][0][1] == 0);

    const json an = run_json({"bell", "lhv", "--d", "6", "--mode", "analytic", "--json"});
    CHECK(an["mode"] == "analytic");
    CHECK(an["max_value"] == 2);
}

TEST_CASE("cli: identical invocations produce byte-identical output") {
    const std::vector<std::string> args = {"game",   "simulate", "--d",   "2",
                                           "--rounds", "5000",   "--seed", "77",
                                           "--json"};
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const CliRun c = run_cli({"bell", "seesaw", "--d", "2", "--trials", "3",
                              "--seed", "4", "--json"});
    const CliRun d = run_cli({"bell", "seesaw", "--d", "2", "--trials", "3",
                              "--seed", "4", "--json"});
    CHECK(c.out == d.out);
}

TEST_CASE("cli: sweep defaults to csv with 7 significant digits") {
    const CliRun r = run_cli({"bell", "sweep", "--dims", "2,3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "d,quantum,classical,ratio");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "2,2.828427,2,1.414214");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "3,3.464102,2,1.732051");
    CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("cli: sweep can emit json rows instead") {
    const CliRun r = run_cli({"bell", "sweep", "--dims", "2", "--out", "json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "bell sweep");
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["d"] == 2);
    CHECK(j["rows"][0]["ratio"].get<double>() ==
          doctest::Approx(1.4142135623730951).epsilon(1e-9));
}

TEST_CASE("cli: --out-file redirects the payload to disk") {
    const std::string path = "qstbell_cli_test_output.json";
    const CliRun direct = run_cli({"bell", "exact", "--d", "2", "--json"});
    const CliRun filed =
        run_cli({"--out-file", path, "bell", "exact", "--d", "2", "--json"});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == direct.out);
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("cli: usage errors exit with status 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"bell", "exact", "--no-such-flag"}).code == 2);
    CHECK(run_cli({"game", "simulate"}).code == 2); // --rounds is required
    CHECK(run_cli({"bell", "exact", "--d", "9"}).code == 2); // out of range
    CHECK(run_cli({}).code == 2); // a subcommand is required
}

TEST_CASE("cli: infeasible computations exit with status 3") {
    const CliRun r = run_cli({"bell", "lhv", "--d", "5", "--mode", "enumerate"});
    CHECK(r.code == 3);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.err.find("analytic") != std::string::npos);
}

TEST_CASE("cli: help requests exit cleanly") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"bell", "--help"}).code == 0);
}

TEST_CASE("cli: thread count falls back to the environment variable") {
    setenv("QSTBELL_THREADS", "2", 1);
    CHECK(run_json({"bell", "exact", "--d", "2", "--json"})["threads"] == 2);
    // an explicit flag wins over the environment
    CHECK(run_json({"--threads", "4", "bell", "exact", "--d", "2", "--json"})["threads"] ==
          4);
    // out-of-range environment values are discarded, leaving the default
    setenv("QSTBELL_THREADS", "0", 1);
    CHECK(run_json({"bell", "exact", "--d", "2", "--json"})["threads"] == 1);
    unsetenv("QSTBELL_THREADS");
    CHECK(run_json({"bell", "exact", "--d", "2", "--json"})["threads"] == 1);
    // the flag itself is still validated
    CHECK(run_cli({"--threads", "0", "bell", "exact", "--d", "2", "--json"}).code == 2);
}
