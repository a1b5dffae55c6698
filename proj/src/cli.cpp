#include "qstbell/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qstbell/bell.hpp"
#include "qstbell/game.hpp"
#include "qstbell/json_io.hpp"
#include "qstbell/lhv.hpp"
#include "qstbell/states.hpp"

namespace qstbell::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    int d = 3;
    std::uint64_t seed = 0;
    std::uint64_t rounds = 1;
    int trials = 20;
    std::vector<int> dims;
    std::string lhv_mode = "enumerate";
    std::string sweep_format = "csv";
    bool as_json = false;
    bool with_eigs = false;
    int threads = 1;
    std::string out_file;
    double hermiticity_tol = Tolerances{}.hermiticity;
    double eigen_tol = JacobiOptions{}.offdiag_target;
};

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

std::string fmt_csv(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.7g", v);
    return buf;
}

std::string fmt_json_num(const ordered_json& v) {
    if (v.is_null()) return "undefined";
    return fmt_num(v.get<double>());
}

std::string fmt_amps(const ordered_json& amps) {
    std::string s = "[";
    bool first = true;
    for (const auto& pair : amps) {
        if (!first) s += ", ";
        first = false;
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%.8g%+.8gi", re, im);
        s += buf;
    }
    return s + "]";
}

const char* basis_name(BobBasis b) { return b == BobBasis::A ? "A" : "APrime"; }

// ---- command handlers, each returning the full JSON result ----

ordered_json run_states_show(const RunConfig& cfg) {
    const int d = cfg.d;
    const OrthonormalBasis comp = computational_basis(d);
    const OrthonormalBasis four = fourier_basis(d);
    const IntermediateGrid grid(d);
    const GameContext ctx(d);

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "states show";
    j["d"] = d;
    j["mub_overlap"] = std::abs(inner(comp.vector(0), four.vector(0)));
    j["control_probability"] = control_probability(comp.vector(0), four.vector(0));
    j["normalizer"] = grid.normalizer();

    ordered_json fire = ordered_json::array();
    for (int k = 0; k < d; ++k) {
        ordered_json row = ordered_json::array();
        for (int l = 0; l < d; ++l) row.push_back(ctx.fire_probability({k, l}));
        fire.push_back(std::move(row));
    }
    j["fire_probabilities"] = std::move(fire);

    ordered_json basis_a = ordered_json::array();
    ordered_json basis_ap = ordered_json::array();
    for (int i = 0; i < d; ++i) {
        basis_a.push_back(amplitudes_json(comp.vector(i)));
        basis_ap.push_back(amplitudes_json(four.vector(i)));
    }
    j["basis_a"] = std::move(basis_a);
    j["basis_a_prime"] = std::move(basis_ap);

    ordered_json inters = ordered_json::array();
    ordered_json steers = ordered_json::array();
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            inters.push_back({{"k", k}, {"l", l}, {"amps", amplitudes_json(grid.at(k, l))}});
            steers.push_back({{"k", k}, {"l", l},
                              {"amps", amplitudes_json(steering_vector(d, {k, l}))}});
        }
    j["intermediates"] = std::move(inters);
    j["steering_vectors"] = std::move(steers);
    return j;
}

std::string text_states_show(const ordered_json& j) {
    std::ostringstream os;
    os << "d                    " << j["d"].get<int>() << "\n";
    os << "mub overlap          " << fmt_json_num(j["mub_overlap"]) << "\n";
    os << "control probability  " << fmt_json_num(j["control_probability"]) << "\n";
    os << "normalizer           " << fmt_json_num(j["normalizer"]) << "\n";
    os << "fire probability     " << fmt_json_num(j["fire_probabilities"][0][0])
       << " (every setting)\n";
    int i = 0;
    for (const auto& v : j["basis_a_prime"])
        os << "fourier " << i++ << "            " << fmt_amps(v) << "\n";
    for (const auto& m : j["intermediates"])
        os << "intermediate (" << m["k"].get<int>() << "," << m["l"].get<int>() << ")"
           << "  " << fmt_amps(m["amps"]) << "\n";
    return os.str();
}

ordered_json run_game_simulate(const RunConfig& cfg) {
    const GameSummary s = simulate(cfg.d, cfg.rounds, cfg.seed);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "game simulate";
    j["d"] = cfg.d;
    j["rounds"] = s.rounds;
    j["announced"] = s.announced;
    j["fire_rate"] = s.fire_rate;
    j["pass_rate_given_announce"] =
        s.pass_rate_given_announce ? ordered_json(*s.pass_rate_given_announce) : ordered_json(nullptr);
    j["fail_rate_given_announce"] =
        s.fail_rate_given_announce ? ordered_json(*s.fail_rate_given_announce) : ordered_json(nullptr);
    j["std_err_pass"] = s.std_err_pass ? ordered_json(*s.std_err_pass) : ordered_json(nullptr);
    j["seed"] = s.seed;
    return j;
}

std::string text_game_simulate(const ordered_json& j) {
    std::ostringstream os;
    os << "d                      " << j["d"].get<int>() << "\n";
    os << "rounds                 " << j["rounds"].get<std::uint64_t>() << "\n";
    os << "announced              " << j["announced"].get<std::uint64_t>() << "\n";
    os << "fire rate              " << fmt_json_num(j["fire_rate"]) << "\n";
    os << "pass rate | announced  " << fmt_json_num(j["pass_rate_given_announce"]) << "\n";
    os << "fail rate | announced  " << fmt_json_num(j["fail_rate_given_announce"]) << "\n";
    os << "std err (pass)         " << fmt_json_num(j["std_err_pass"]) << "\n";
    os << "seed                   " << j["seed"].get<std::uint64_t>() << "\n";
    return os.str();
}

ordered_json table_json(const std::vector<SettingProbabilities>& table) {
    ordered_json rows = ordered_json::array();
    for (const SettingProbabilities& row : table) {
        ordered_json r;
        r["k"] = row.setting.alice.k;
        r["l"] = row.setting.alice.l;
        r["bob"] = basis_name(row.setting.bob);
        r["correlated"] = row.correlated;
        r["joint"] = row.joint;
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json run_bell_exact(const RunConfig& cfg) {
    const BellReport report = bell_report(cfg.d, cfg.threads);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "bell exact";
    j["threads"] = cfg.threads;
    j["d"] = report.d;
    j["quantum_value"] = report.quantum_value;
    j["classical_bound"] = report.classical_bound;
    j["violation_ratio"] = report.violation_ratio;
    j["table"] = table_json(report.table);
    return j;
}

std::string text_bell_exact(const ordered_json& j) {
    std::ostringstream os;
    os << "d          " << j["d"].get<int>() << "\n";
    os << "quantum    " << fmt_json_num(j["quantum_value"]) << "\n";
    os << "classical  " << fmt_json_num(j["classical_bound"]) << "\n";
    os << "ratio      " << fmt_json_num(j["violation_ratio"]) << "\n";
    return os.str();
}

ordered_json run_bell_operator(const RunConfig& cfg) {
    const HermitianOperator op = bell_operator(cfg.d, cfg.hermiticity_tol);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "bell operator";
    j["d"] = cfg.d;
    j["dim"] = op.dim();
    j["trace"] = complex_json(op.trace());
    j["matrix"] = entries_json(op);
    if (cfg.with_eigs) {
        JacobiOptions jopts;
        jopts.offdiag_target = cfg.eigen_tol;
        jopts.hermiticity_tol = cfg.hermiticity_tol;
        const EigenDecomposition dec = hermitian_eigs(op, jopts);
        j["eigenvalues"] = dec.eigenvalues;
        j["top_eigenvalue"] = dec.eigenvalues.front();
        j["entangled_fidelity"] =
            fidelity(dec.eigenvectors.front(), max_entangled(cfg.d));
    }
    return j;
}

std::string text_bell_operator(const ordered_json& j) {
    std::ostringstream os;
    os << "d      " << j["d"].get<int>() << "\n";
    os << "dim    " << j["dim"].get<int>() << "\n";
    os << "trace  " << fmt_json_num(j["trace"][0]) << " " << fmt_json_num(j["trace"][1])
       << "i\n";
    if (j.contains("top_eigenvalue")) {
        os << "top eigenvalue       " << fmt_json_num(j["top_eigenvalue"]) << "\n";
        os << "entangled fidelity   " << fmt_json_num(j["entangled_fidelity"]) << "\n";
        os << "eigenvalues          [";
        bool first = true;
        for (const auto& ev : j["eigenvalues"]) {
            if (!first) os << ", ";
            first = false;
            os << fmt_json_num(ev);
        }
        os << "]\n";
    }
    return os.str();
}

ordered_json run_bell_seesaw(const RunConfig& cfg) {
    SeesawOptions opts;
    opts.threads = cfg.threads;
    opts.jacobi.offdiag_target = cfg.eigen_tol;
    opts.jacobi.hermiticity_tol = cfg.hermiticity_tol;
    const SeesawResult res = seesaw_verify(cfg.d, cfg.trials, cfg.seed, opts);

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "bell seesaw";
    j["threads"] = cfg.threads;
    j["d"] = cfg.d;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["best_value"] = res.best_value;
    j["reference_value"] = 2.0 * std::sqrt(static_cast<double>(cfg.d));
    j["all_converged"] = res.all_converged;
    ordered_json trials = ordered_json::array();
    for (const SeesawTrial& t : res.trials)
        trials.push_back({{"value", t.value}, {"converged", t.converged},
                          {"iterations", t.iterations}});
    j["trial_details"] = std::move(trials);
    return j;
}

std::string text_bell_seesaw(const ordered_json& j) {
    std::ostringstream os;
    int converged = 0;
    for (const auto& t : j["trial_details"])
        if (t["converged"].get<bool>()) ++converged;
    os << "d           " << j["d"].get<int>() << "\n";
    os << "trials      " << j["trials"].get<int>() << "\n";
    os << "seed        " << j["seed"].get<std::uint64_t>() << "\n";
    os << "best value  " << fmt_json_num(j["best_value"]) << "\n";
    os << "reference   " << fmt_json_num(j["reference_value"]) << "\n";
    os << "converged   " << converged << "/" << j["trials"].get<int>() << "\n";
    return os.str();
}

ordered_json run_bell_lhv(const RunConfig& cfg) {
    const LhvResult res = cfg.lhv_mode == "analytic" ? analytic_max(cfg.d)
                                                     : enumerate_max(cfg.d, cfg.threads);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "bell lhv";
    j["threads"] = cfg.threads;
    j["d"] = cfg.d;
    j["mode"] = res.mode == LhvMode::Exhaustive ? "enumerate" : "analytic";
    j["max_value"] = res.max_value;
    ordered_json fired = ordered_json::array();
    for (int k = 0; k < cfg.d; ++k)
        for (int l = 0; l < cfg.d; ++l)
            if ((res.argmax.fires >> (k * cfg.d + l)) & 1)
                fired.push_back(ordered_json::array({k, l}));
    j["argmax"] = {{"a", res.argmax.a}, {"a_prime", res.argmax.a_prime}, {"fires", fired}};
    j["strategies_scanned"] = res.strategies_scanned;
    return j;
}

std::string text_bell_lhv(const ordered_json& j) {
    std::ostringstream os;
    os << "d                   " << j["d"].get<int>() << "\n";
    os << "mode                " << j["mode"].get<std::string>() << "\n";
    os << "max value           " << j["max_value"].get<int>() << "\n";
    os << "strategies scanned  " << j["strategies_scanned"].get<std::uint64_t>() << "\n";
    os << "argmax              a=" << j["argmax"]["a"].get<int>()
       << " a'=" << j["argmax"]["a_prime"].get<int>() << " fires=[";
    bool first = true;
    for (const auto& kl : j["argmax"]["fires"]) {
        if (!first) os << " ";
        first = false;
        os << "(" << kl[0].get<int>() << "," << kl[1].get<int>() << ")";
    }
    os << "]\n";
    return os.str();
}

ordered_json run_bell_sweep(const RunConfig& cfg) {
    const std::vector<SweepRow> rows = dimension_sweep(cfg.dims, cfg.threads);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "bell sweep";
    j["threads"] = cfg.threads;
    ordered_json arr = ordered_json::array();
    for (const SweepRow& row : rows)
        arr.push_back({{"d", row.d},
                       {"quantum", row.quantum_value},
                       {"classical", row.classical_bound},
                       {"ratio", row.ratio}});
    j["rows"] = std::move(arr);
    return j;
}

std::string text_bell_sweep(const ordered_json& j) {
    std::ostringstream os;
    os << "d,quantum,classical,ratio\n";
    for (const auto& row : j["rows"])
        os << row["d"].get<int>() << "," << fmt_csv(row["quantum"].get<double>()) << ","
           << fmt_csv(row["classical"].get<double>()) << ","
           << fmt_csv(row["ratio"].get<double>()) << "\n";
    return os.str();
}

int emit(const RunConfig& cfg, const ordered_json& result,
         const std::function<std::string(const ordered_json&)>& text_renderer,
         bool want_json, std::ostream& out) {
    const std::string payload =
        want_json ? result.dump(2) + "\n" : text_renderer(result);
    if (!cfg.out_file.empty()) {
        std::ofstream f(cfg.out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + cfg.out_file);
        f << payload;
        if (!f) throw std::runtime_error("failed writing output file " + cfg.out_file);
        return 0;
    }
    out << payload;
    return 0;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"targeting-game Bell inequality toolkit"};
    app.name("qstbell");
    app.require_subcommand(1);

    app.add_option("--threads", cfg.threads, "worker threads hint")
        ->envname("QSTBELL_THREADS")
        ->check(CLI::Range(1, 256));
    app.add_option("--out-file", cfg.out_file, "write the result to a file instead of stdout");
    app.add_option("--hermiticity-tol", cfg.hermiticity_tol, "operator Hermiticity tolerance");
    app.add_option("--eigen-tol", cfg.eigen_tol, "eigensolver off-diagonal target");

    const auto add_dim = [&](CLI::App* cmd) {
        cmd->add_option("--d", cfg.d, "qudit dimension")->check(CLI::Range(kMinDim, kMaxDim));
    };
    const auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", cfg.as_json, "emit JSON instead of text");
    };

    CLI::App* states = app.add_subcommand("states", "state constructions");
    states->require_subcommand(1);
    CLI::App* states_show = states->add_subcommand("show", "bases, intermediate states, overlaps");
    add_dim(states_show);
    add_json(states_show);

    CLI::App* game = app.add_subcommand("game", "targeting game simulation");
    game->require_subcommand(1);
    CLI::App* game_simulate = game->add_subcommand("simulate", "play seeded rounds and summarize");
    add_dim(game_simulate);
    add_json(game_simulate);
    game_simulate->add_option("--rounds", cfg.rounds, "number of rounds")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
    game_simulate->add_option("--seed", cfg.seed, "random seed");

    CLI::App* bell = app.add_subcommand("bell", "inequality evaluation");
    bell->require_subcommand(1);

    CLI::App* bell_exact = bell->add_subcommand("exact", "quantum value, classical bound, ratio");
    add_dim(bell_exact);
    add_json(bell_exact);

    CLI::App* bell_op = bell->add_subcommand("operator", "operator form of the inequality");
    add_dim(bell_op);
    add_json(bell_op);
    bell_op->add_flag("--eigs", cfg.with_eigs, "include the spectrum");

    CLI::App* bell_seesaw = bell->add_subcommand("seesaw", "alternating optimization check");
    add_dim(bell_seesaw);
    add_json(bell_seesaw);
    bell_seesaw->add_option("--trials", cfg.trials, "random restarts")->check(CLI::Range(1, 10000));
    bell_seesaw->add_option("--seed", cfg.seed, "random seed");

    CLI::App* bell_lhv = bell->add_subcommand("lhv", "deterministic-strategy bound");
    add_dim(bell_lhv);
    add_json(bell_lhv);
    bell_lhv->add_option("--mode", cfg.lhv_mode, "enumerate or analytic")
        ->check(CLI::IsMember({"enumerate", "analytic"}));

    CLI::App* bell_sweep = bell->add_subcommand("sweep", "quantum vs classical across dimensions");
    bell_sweep->add_option("--dims", cfg.dims, "dimensions, comma separated")
        ->required()
        ->delimiter(',');
    bell_sweep->add_option("--out", cfg.sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qstbell");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (states_show->parsed())
            return emit(cfg, run_states_show(cfg), text_states_show, cfg.as_json, out);
        if (game_simulate->parsed())
            return emit(cfg, run_game_simulate(cfg), text_game_simulate, cfg.as_json, out);
        if (bell_exact->parsed())
            return emit(cfg, run_bell_exact(cfg), text_bell_exact, cfg.as_json, out);
        if (bell_op->parsed())
            return emit(cfg, run_bell_operator(cfg), text_bell_operator, cfg.as_json, out);
        if (bell_seesaw->parsed())
            return emit(cfg, run_bell_seesaw(cfg), text_bell_seesaw, cfg.as_json, out);
        if (bell_lhv->parsed())
            return emit(cfg, run_bell_lhv(cfg), text_bell_lhv, cfg.as_json, out);
        if (bell_sweep->parsed())
            return emit(cfg, run_bell_sweep(cfg), text_bell_sweep,
                        cfg.sweep_format == "json", out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no command selected\n";
    return 2;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return dispatch(args, std::cout, std::cerr);
}

} // namespace qstbell::cli
