// Assembles the inequality generated by the targeting game: over all 2*d^2
// (Alice setting, Bob basis) pairs, sum the joint probability of firing with
// the correlated outcome minus the joint probabilities of firing with any
// other outcome.  The maximally entangled state reaches 2*sqrt(d); local
// deterministic strategies stop at 2.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qstbell/linalg.hpp"
#include "qstbell/states.hpp"

namespace qstbell {

struct SettingPair {
    TargetSet alice;
    BobBasis bob = BobBasis::A;
};

// The outcome that counts as a success for a pair: Bob finds the target-set
// member living in the basis he measures.
int correlated_outcome(const SettingPair& pair);

// Bookkeeping that maps the intermediate grid onto measurement families with
// integer values: the grid state (k, l) carries value k and belongs to
// family (l - k) mod d.
struct ValueAssignment {
    int d;

    int m_value(int k, int l) const;
    int a_value(int i) const;
    int aprime_value(int j) const;
    int mset_of(int k, int l) const;
};

struct SettingProbabilities {
    SettingPair setting;
    int correlated = 0;
    std::vector<double> joint; // p(fire AND outcome = x) for x in [0, d)
};

// All 2*d^2 rows of joint probabilities for a bipartite state, settings in
// row-major (k, l) order with basis A before APrime.
std::vector<SettingProbabilities> joint_table(const StateVector& state, int d);

// The inequality sum evaluated directly from Born-rule joint probabilities.
double bell_value(const StateVector& state, int d);

// Operator whose expectation reproduces bell_value for every state.
HermitianOperator bell_operator(int d, double hermiticity_tol = Tolerances{}.hermiticity);

struct BellReport {
    int d = 0;
    double quantum_value = 0.0;
    double classical_bound = 0.0;
    double violation_ratio = 0.0;
    std::vector<SettingProbabilities> table;
};

// Report for the maximally entangled state, cross-checked against the table
// before it is returned.
BellReport bell_report(int d, int threads = 1);

struct SeesawTrial {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

struct SeesawOptions {
    int max_iterations = 500;
    double value_tol = 1e-12;
    int threads = 1;
    // overrides the random start of trial 0 (used to probe fixed points)
    std::optional<StateVector> initial_state;
    JacobiOptions jacobi{};
};

struct SeesawResult {
    double best_value = 0.0;
    bool all_converged = true;
    std::vector<SeesawTrial> trials;
};

// Alternating optimization over the shared state and Alice's rank-1
// effects, with Bob's two bases held fixed.  Each trial starts from an
// independent random state; values are monotone within a trial.
SeesawResult seesaw_verify(int d, int trials, std::uint64_t seed,
                           const SeesawOptions& opts = {});

struct SweepRow {
    int d = 0;
    double quantum_value = 0.0;
    double classical_bound = 0.0;
    double ratio = 0.0;
};

std::vector<SweepRow> dimension_sweep(const std::vector<int>& dims, int threads = 1);

} // namespace qstbell
