// Python bindings for the targeting-game toolkit.  Vectors cross the
// boundary as plain lists of complex numbers; result records are bound as
// lightweight readonly classes.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qstbell/bell.hpp"
#include "qstbell/game.hpp"
#include "qstbell/lhv.hpp"
#include "qstbell/states.hpp"

namespace py = pybind11;

namespace {

using qstbell::Complex;
using qstbell::StateVector;

using Amps = std::vector<Complex>;

StateVector to_state(const Amps& amps) { return StateVector(amps); }

Amps from_state(const StateVector& v) { return v.amps(); }

std::vector<Amps> basis_list(const qstbell::OrthonormalBasis& b) {
    std::vector<Amps> out;
    out.reserve(static_cast<std::size_t>(b.dim()));
    for (int i = 0; i < b.dim(); ++i) out.push_back(b.vector(i).amps());
    return out;
}

} // namespace

PYBIND11_MODULE(_qstbell, m) {
    m.doc() = "quantum state targeting game and the Bell inequality it generates";
    m.attr("__version__") = "0.1.0";

    // --- states ---
    m.def("computational_basis",
          [](int d) { return basis_list(qstbell::computational_basis(d)); }, py::arg("d"));
    m.def("fourier_basis",
          [](int d) { return basis_list(qstbell::fourier_basis(d)); }, py::arg("d"));
    m.def("intermediate",
          [](const Amps& p1, const Amps& p2) {
              return from_state(qstbell::intermediate(to_state(p1), to_state(p2)));
          },
          py::arg("psi1"), py::arg("psi2"));
    m.def("grid_intermediate",
          [](int d, int k, int l) { return from_state(qstbell::grid_intermediate(d, k, l)); },
          py::arg("d"), py::arg("k"), py::arg("l"));
    m.def("max_entangled",
          [](int d) { return from_state(qstbell::max_entangled(d)); }, py::arg("d"));
    m.def("steering_vector",
          [](int d, int k, int l) {
              return from_state(qstbell::steering_vector(d, {k, l}));
          },
          py::arg("d"), py::arg("k"), py::arg("l"));
    m.def("intermediate_normalizer", &qstbell::intermediate_normalizer, py::arg("d"));

    // --- linalg ---
    m.def("inner",
          [](const Amps& u, const Amps& v) { return qstbell::inner(to_state(u), to_state(v)); },
          py::arg("u"), py::arg("v"));
    m.def("fidelity",
          [](const Amps& u, const Amps& v) {
              return qstbell::fidelity(to_state(u), to_state(v));
          },
          py::arg("u"), py::arg("v"));
    m.def("tensor",
          [](const Amps& u, const Amps& v) {
              return from_state(qstbell::tensor(to_state(u), to_state(v)));
          },
          py::arg("u"), py::arg("v"));
    m.def("born_joint",
          [](const Amps& state, const Amps& effect_a, const Amps& outcome_b) {
              return qstbell::born_joint(to_state(state), to_state(effect_a), to_state(outcome_b));
          },
          py::arg("state"), py::arg("effect_a"), py::arg("outcome_b"));

    // --- game ---
    m.def("control_probability",
          [](const Amps& p1, const Amps& p2) {
              return qstbell::control_probability(to_state(p1), to_state(p2));
          },
          py::arg("psi1"), py::arg("psi2"));

    py::class_<qstbell::GameSummary>(m, "GameSummary")
        .def_readonly("rounds", &qstbell::GameSummary::rounds)
        .def_readonly("announced", &qstbell::GameSummary::announced)
        .def_readonly("fire_rate", &qstbell::GameSummary::fire_rate)
        .def_readonly("pass_rate_given_announce", &qstbell::GameSummary::pass_rate_given_announce)
        .def_readonly("fail_rate_given_announce", &qstbell::GameSummary::fail_rate_given_announce)
        .def_readonly("std_err_pass", &qstbell::GameSummary::std_err_pass)
        .def_readonly("seed", &qstbell::GameSummary::seed)
        .def("__repr__", [](const qstbell::GameSummary& s) {
            return "GameSummary(rounds=" + std::to_string(s.rounds) +
                   ", fire_rate=" + std::to_string(s.fire_rate) + ")";
        });
    m.def("simulate", &qstbell::simulate, py::arg("d"), py::arg("rounds"), py::arg("seed") = 0);

    // --- bell ---
    m.def("bell_value",
          [](const Amps& state, int d) { return qstbell::bell_value(to_state(state), d); },
          py::arg("state"), py::arg("d"));

    py::class_<qstbell::BellReport>(m, "BellReport")
        .def_readonly("d", &qstbell::BellReport::d)
        .def_readonly("quantum_value", &qstbell::BellReport::quantum_value)
        .def_readonly("classical_bound", &qstbell::BellReport::classical_bound)
        .def_readonly("violation_ratio", &qstbell::BellReport::violation_ratio)
        .def("__repr__", [](const qstbell::BellReport& r) {
            return "BellReport(d=" + std::to_string(r.d) +
                   ", quantum_value=" + std::to_string(r.quantum_value) +
                   ", classical_bound=" + std::to_string(r.classical_bound) + ")";
        });
    m.def("bell_report", &qstbell::bell_report, py::arg("d"), py::arg("threads") = 1);

    m.def("bell_operator_eigenvalues",
          [](int d) { return qstbell::hermitian_eigs(qstbell::bell_operator(d)).eigenvalues; },
          py::arg("d"));

    py::class_<qstbell::SeesawResult>(m, "SeesawResult")
        .def_readonly("best_value", &qstbell::SeesawResult::best_value)
        .def_readonly("all_converged", &qstbell::SeesawResult::all_converged)
        .def("__repr__", [](const qstbell::SeesawResult& r) {
            return "SeesawResult(best_value=" + std::to_string(r.best_value) + ")";
        });
    m.def("seesaw_verify",
          [](int d, int trials, std::uint64_t seed) {
              return qstbell::seesaw_verify(d, trials, seed);
          },
          py::arg("d"), py::arg("trials") = 20, py::arg("seed") = 0);

    // --- lhv ---
    py::class_<qstbell::LhvResult>(m, "LhvResult")
        .def_readonly("max_value", &qstbell::LhvResult::max_value)
        .def_readonly("strategies_scanned", &qstbell::LhvResult::strategies_scanned)
        .def_property_readonly("a", [](const qstbell::LhvResult& r) { return r.argmax.a; })
        .def_property_readonly("a_prime",
                               [](const qstbell::LhvResult& r) { return r.argmax.a_prime; })
        .def_property_readonly("fires", [](const qstbell::LhvResult& r) { return r.argmax.fires; })
        .def("__repr__", [](const qstbell::LhvResult& r) {
            return "LhvResult(max_value=" + std::to_string(r.max_value) +
                   ", strategies_scanned=" + std::to_string(r.strategies_scanned) + ")";
        });
    m.def("score_strategy",
          [](int a, int a_prime, std::uint64_t fires, int d) {
              return qstbell::score_strategy({a, a_prime, fires}, d);
          },
          py::arg("a"), py::arg("a_prime"), py::arg("fires"), py::arg("d"));
    m.def("lhv_enumerate",
          [](int d, int threads) { return qstbell::enumerate_max(d, threads); }, py::arg("d"),
          py::arg("threads") = 1);
    m.def("lhv_analytic", &qstbell::analytic_max, py::arg("d"));

    m.def("dimension_sweep", [](const std::vector<int>& dims) {
        std::vector<std::tuple<int, double, double, double>> rows;
        for (const qstbell::SweepRow& r : qstbell::dimension_sweep(dims))
            rows.emplace_back(r.d, r.quantum_value, r.classical_bound, r.ratio);
        return rows;
    }, py::arg("dims"));
}
