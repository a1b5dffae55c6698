// The targeting game on a shared maximally entangled pair, played with the
// maximum-control strategy: Alice measures the steering projector for the
// round's target set before Bob reveals his choice, announces the target
// whenever the projection fired and declines otherwise.
//
// Randomness contract: each round consumes its own counter-based stream
// (seed, round index) with fixed draw order
//   draw 0: target k   draw 1: target l   draw 2: Alice fire
//   draw 3: Bob choice draw 4: Bob outcome (only when fired)
// so a fixed seed reproduces the exact round sequence and rounds can be
// generated independently in any order.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qstbell/rng.hpp"
#include "qstbell/states.hpp"

namespace qstbell {

enum class Announcement { TargetState, NonTargetState, Declined };
enum class Verdict { Pass, Fail, Declined };

struct GameRound {
    TargetSet target;
    BobBasis bob_choice = BobBasis::A;
    bool alice_fired = false;
    Announcement announcement = Announcement::Declined;
    std::optional<int> bob_outcome; // present iff alice_fired
    Verdict verdict = Verdict::Declined;
};

// Hook for non-default announcement behavior, consulted only when Alice's
// measurement fired.  Return true to announce Bob's chosen target, false to
// announce the other member of the target set.  The default strategy always
// announces the target.
using AlicePolicy = std::function<bool(const TargetSet&, BobBasis)>;

// Precomputed per-dimension tables (steering vectors, fire probabilities,
// Bob's conditional outcome distributions), all derived through the Born
// rule on the shared entangled state.
class GameContext {
public:
    explicit GameContext(int d);

    int dim() const { return d_; }

    GameRound play_round(RngStream stream) const;
    GameRound play_round(RngStream stream, const AlicePolicy& policy) const;

    // Born probability that Alice's steering projection fires (= 1/d).
    double fire_probability(const TargetSet& t) const;

    // Probability that Bob's test passes given an announcement, computed
    // analytically from the conditional state.
    double conditional_pass_probability(const TargetSet& t, BobBasis chosen) const;

private:
    int d_;
    std::vector<double> fire_prob_;           // (k, l)
    std::vector<std::vector<double>> cond_;   // (k, l, basis) -> outcome dist
};

// Convenience wrapper over a one-shot context.
GameRound play_round(int d, RngStream stream);

struct GameSummary {
    std::uint64_t rounds = 0;
    std::uint64_t announced = 0;
    double fire_rate = 0.0;
    // undefined (nullopt) when no round was announced
    std::optional<double> pass_rate_given_announce;
    std::optional<double> fail_rate_given_announce;
    std::optional<double> std_err_pass;
    std::uint64_t seed = 0;
};

GameSummary simulate(int d, std::uint64_t n_rounds, std::uint64_t seed);

// Best achievable probability of passing a test for either of two candidate
// states when the submitted system is their intermediate state:
// (1 + |<psi1|psi2>|) / 2.  Dimension independent.
double control_probability(const StateVector& psi1, const StateVector& psi2);

} // namespace qstbell
