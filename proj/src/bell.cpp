#include "qstbell/bell.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qstbell/lhv.hpp"

namespace qstbell {

int correlated_outcome(const SettingPair& pair) {
    return pair.bob == BobBasis::A ? pair.alice.k : pair.alice.l;
}

int ValueAssignment::m_value(int k, int l) const {
    (void)l;
    return k;
}

int ValueAssignment::a_value(int i) const { return i; }

int ValueAssignment::aprime_value(int j) const { return j; }

int ValueAssignment::mset_of(int k, int l) const {
    return ((l - k) % d + d) % d;
}

namespace {

std::vector<SettingPair> all_setting_pairs(int d) {
    std::vector<SettingPair> pairs;
    pairs.reserve(static_cast<std::size_t>(d) * d * 2);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            for (BobBasis b : {BobBasis::A, BobBasis::APrime})
                pairs.push_back({{k, l}, b});
    return pairs;
}

void check_bipartite_dim(const StateVector& state, int d, const char* op) {
    if (state.dim() != d * d)
        throw std::invalid_argument(std::string(op) + ": state dim must be d^2");
}

} // namespace

std::vector<SettingProbabilities> joint_table(const StateVector& state, int d) {
    check_dim(d);
    check_bipartite_dim(state, d, "joint_table");
    const OrthonormalBasis comp = computational_basis(d);
    const OrthonormalBasis four = fourier_basis(d);

    std::vector<SettingProbabilities> table;
    for (const SettingPair& pair : all_setting_pairs(d)) {
        const StateVector steer = steering_vector(d, pair.alice);
        const OrthonormalBasis& bb = pair.bob == BobBasis::A ? comp : four;
        SettingProbabilities row;
        row.setting = pair;
        row.correlated = correlated_outcome(pair);
        row.joint.resize(static_cast<std::size_t>(d));
        for (int x = 0; x < d; ++x)
            row.joint[static_cast<std::size_t>(x)] = born_joint(state, steer, bb.vector(x));
        table.push_back(std::move(row));
    }
    return table;
}

double bell_value(const StateVector& state, int d) {
    check_dim(d);
    check_bipartite_dim(state, d, "bell_value");
    const OrthonormalBasis comp = computational_basis(d);
    const OrthonormalBasis four = fourier_basis(d);

    double sum = 0.0;
    for (const SettingPair& pair : all_setting_pairs(d)) {
        const StateVector steer = steering_vector(d, pair.alice);
        const OrthonormalBasis& bb = pair.bob == BobBasis::A ? comp : four;
        const int corr = correlated_outcome(pair);
        for (int x = 0; x < d; ++x) {
            const double p = born_joint(state, steer, bb.vector(x));
            sum += x == corr ? p : -p;
        }
    }
    return sum;
}

HermitianOperator bell_operator(int d, double hermiticity_tol) {
    check_dim(d);
    const OrthonormalBasis comp = computational_basis(d);
    const OrthonormalBasis four = fourier_basis(d);
    const int n = d * d;

    std::vector<Complex> entries(static_cast<std::size_t>(n) * n);
    for (const SettingPair& pair : all_setting_pairs(d)) {
        const StateVector steer = steering_vector(d, pair.alice);
        const OrthonormalBasis& bb = pair.bob == BobBasis::A ? comp : four;
        const int corr = correlated_outcome(pair);
        for (int x = 0; x < d; ++x) {
            const double sign = x == corr ? 1.0 : -1.0;
            const StateVector& bx = bb.vector(x);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const Complex alice = steer[i] * std::conj(steer[j]);
                    for (int m = 0; m < d; ++m)
                        for (int nn = 0; nn < d; ++nn)
                            entries[static_cast<std::size_t>(i * d + m) * n + (j * d + nn)] +=
                                sign * alice * bx[m] * std::conj(bx[nn]);
                }
        }
    }
    return HermitianOperator::from_entries(n, std::move(entries), hermiticity_tol);
}

BellReport bell_report(int d, int threads) {
    check_dim(d);
    const StateVector shared = max_entangled(d);

    BellReport report;
    report.d = d;
    report.quantum_value = bell_value(shared, d);
    report.classical_bound = static_cast<double>(classical_bound(d, threads));
    report.violation_ratio = report.quantum_value / report.classical_bound;
    report.table = joint_table(shared, d);

    // the table must retell the same number
    double from_table = 0.0;
    for (const SettingProbabilities& row : report.table)
        for (int x = 0; x < d; ++x) {
            const double p = row.joint[static_cast<std::size_t>(x)];
            from_table += x == row.correlated ? p : -p;
        }
    if (std::abs(from_table - report.quantum_value) > 1e-12)
        throw std::runtime_error("bell_report: table sum disagrees with direct evaluation");
    return report;
}

namespace {

// Bob-side sign operator for one Alice setting, summed over both bases:
// (2|a_k><a_k| - I) + (2|a'_l><a'_l| - I).
HermitianOperator bob_sign_operator(const OrthonormalBasis& comp, const OrthonormalBasis& four,
                                    const TargetSet& t) {
    const int d = comp.dim();
    HermitianOperator k1 = add(scale(2.0, HermitianOperator::projector(comp.vector(t.k))),
                               scale(-1.0, HermitianOperator::identity(d)));
    HermitianOperator k2 = add(scale(2.0, HermitianOperator::projector(four.vector(t.l))),
                               scale(-1.0, HermitianOperator::identity(d)));
    return add(k1, k2);
}

// Tr_Bob[(I (x) K) |psi><psi|]: the operator whose expectation against
// Alice's effect vector gives that setting's contribution.
HermitianOperator alice_conditional(const StateVector& psi, const HermitianOperator& k) {
    const int d = k.dim();
    std::vector<Complex> entries(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s = 0.0;
            for (int m = 0; m < d; ++m)
                for (int mp = 0; mp < d; ++mp)
                    s += k.entry(m, mp) * psi[i * d + mp] * std::conj(psi[j * d + m]);
            entries[static_cast<std::size_t>(i) * d + j] = s;
        }
    return HermitianOperator::from_entries(d, std::move(entries));
}

SeesawTrial run_seesaw_trial(int d, StateVector psi,
                             const std::vector<HermitianOperator>& bob_signs,
                             const SeesawOptions& opts) {
    const int n = d * d;
    SeesawTrial trial;
    double value = -std::numeric_limits<double>::infinity();

    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
        trial.iterations = iter;

        // best rank-1 effect per setting for the current state
        std::vector<StateVector> effects;
        effects.reserve(bob_signs.size());
        for (const HermitianOperator& k : bob_signs) {
            const EigenDecomposition dec = hermitian_eigs(alice_conditional(psi, k), opts.jacobi);
            effects.push_back(dec.eigenvectors.front());
        }

        // best state for the current effects
        std::vector<Complex> entries(static_cast<std::size_t>(n) * n);
        for (std::size_t idx = 0; idx < bob_signs.size(); ++idx) {
            const StateVector& e = effects[idx];
            const HermitianOperator& k = bob_signs[idx];
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const Complex alice = e[i] * std::conj(e[j]);
                    for (int m = 0; m < d; ++m)
                        for (int mp = 0; mp < d; ++mp)
                            entries[static_cast<std::size_t>(i * d + m) * n + (j * d + mp)] +=
                                alice * k.entry(m, mp);
                }
        }
        const HermitianOperator current =
            HermitianOperator::from_entries(n, std::move(entries));
        const EigenDecomposition dec = hermitian_eigs(current, opts.jacobi);
        const double new_value = dec.eigenvalues.front();
        psi = dec.eigenvectors.front();

        if (new_value - value < opts.value_tol) {
            trial.value = new_value;
            trial.converged = true;
            return trial;
        }
        value = new_value;
    }
    trial.value = value;
    trial.converged = false;
    return trial;
}

} // namespace

SeesawResult seesaw_verify(int d, int trials, std::uint64_t seed, const SeesawOptions& opts) {
    check_dim(d);
    if (trials < 1) throw std::invalid_argument("seesaw_verify: need at least one trial");

    const OrthonormalBasis comp = computational_basis(d);
    const OrthonormalBasis four = fourier_basis(d);
    std::vector<HermitianOperator> bob_signs;
    bob_signs.reserve(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            bob_signs.push_back(bob_sign_operator(comp, four, {k, l}));

    const Rng rng(seed);
    SeesawResult result;
    result.trials.resize(static_cast<std::size_t>(trials));

    auto run_trial = [&](int t) {
        RngStream stream = rng.stream(static_cast<std::uint64_t>(t));
        StateVector start = (t == 0 && opts.initial_state)
                                ? *opts.initial_state
                                : random_unit_state(d * d, stream);
        result.trials[static_cast<std::size_t>(t)] = run_seesaw_trial(d, std::move(start), bob_signs, opts);
    };

    const int workers = opts.threads < 1 ? 1 : (opts.threads < trials ? opts.threads : trials);
    if (workers == 1) {
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int t = w; t < trials; t += workers) run_trial(t);
            });
        for (std::thread& t : pool) t.join();
    }

    result.best_value = result.trials.front().value;
    for (const SeesawTrial& t : result.trials) {
        if (t.value > result.best_value) result.best_value = t.value;
        if (!t.converged) result.all_converged = false;
    }
    return result;
}

std::vector<SweepRow> dimension_sweep(const std::vector<int>& dims, int threads) {
    if (dims.empty()) throw std::invalid_argument("dimension_sweep: empty dimension list");
    std::vector<SweepRow> rows;
    rows.reserve(dims.size());
    for (int d : dims) {
        check_dim(d);
        SweepRow row;
        row.d = d;
        row.quantum_value = bell_value(max_entangled(d), d);
        row.classical_bound = static_cast<double>(classical_bound(d, threads));
        row.ratio = row.quantum_value / row.classical_bound;
        rows.push_back(row);
    }
    return rows;
}

} // namespace qstbell
