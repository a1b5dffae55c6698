#include "qstbell/game.hpp"

#include <cmath>
#include <stdexcept>

namespace qstbell {

GameContext::GameContext(int d) : d_(d) {
    check_dim(d);
    const StateVector shared = max_entangled(d);
    const OrthonormalBasis comp = computational_basis(d);
    const OrthonormalBasis four = fourier_basis(d);

    fire_prob_.resize(static_cast<std::size_t>(d) * d);
    cond_.resize(static_cast<std::size_t>(d) * d * 2);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            const StateVector steer = steering_vector(d, {k, l});

            // project Alice's half onto the steering vector: Bob's
            // unnormalized conditional amplitudes and the fire weight
            std::vector<Complex> bob(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                Complex s = 0.0;
                for (int i = 0; i < d; ++i)
                    s += std::conj(steer[i]) * shared[i * d + j];
                bob[static_cast<std::size_t>(j)] = s;
            }
            const StateVector unnorm{std::move(bob)};
            const double fire = unnorm.norm_sq();
            fire_prob_[static_cast<std::size_t>(k) * d + l] = fire;
            const StateVector conditional = unnorm.normalized();

            for (int basis = 0; basis < 2; ++basis) {
                const OrthonormalBasis& bb = basis == 0 ? comp : four;
                std::vector<double> dist(static_cast<std::size_t>(d));
                for (int x = 0; x < d; ++x)
                    dist[static_cast<std::size_t>(x)] = fidelity(bb.vector(x), conditional);
                cond_[(static_cast<std::size_t>(k) * d + l) * 2 + basis] = std::move(dist);
            }
        }
}

double GameContext::fire_probability(const TargetSet& t) const {
    if (t.k < 0 || t.k >= d_ || t.l < 0 || t.l >= d_)
        throw std::invalid_argument("fire_probability: target out of range");
    return fire_prob_[static_cast<std::size_t>(t.k) * d_ + t.l];
}

double GameContext::conditional_pass_probability(const TargetSet& t, BobBasis chosen) const {
    if (t.k < 0 || t.k >= d_ || t.l < 0 || t.l >= d_)
        throw std::invalid_argument("conditional_pass_probability: target out of range");
    const int basis = chosen == BobBasis::A ? 0 : 1;
    const int want = chosen == BobBasis::A ? t.k : t.l;
    return cond_[(static_cast<std::size_t>(t.k) * d_ + t.l) * 2 + basis]
                [static_cast<std::size_t>(want)];
}

GameRound GameContext::play_round(RngStream stream) const {
    return play_round(std::move(stream), AlicePolicy{});
}

GameRound GameContext::play_round(RngStream stream, const AlicePolicy& policy) const {
    GameRound round;
    round.target.k = static_cast<int>(stream.next_below(static_cast<std::uint32_t>(d_)));
    round.target.l = static_cast<int>(stream.next_below(static_cast<std::uint32_t>(d_)));

    // Alice's measurement result is settled before Bob reveals anything
    round.alice_fired = stream.next_unit() < fire_probability(round.target);
    round.bob_choice = stream.next_below(2) == 0 ? BobBasis::A : BobBasis::APrime;

    if (!round.alice_fired) {
        round.announcement = Announcement::Declined;
        round.verdict = Verdict::Declined;
        return round;
    }

    const bool announce_target = policy ? policy(round.target, round.bob_choice) : true;
    round.announcement = announce_target ? Announcement::TargetState
                                         : Announcement::NonTargetState;

    // Bob tests whichever state was announced, in that state's basis
    const BobBasis tested = announce_target ? round.bob_choice : other_basis(round.bob_choice);
    const std::vector<double>& dist =
        cond_[(static_cast<std::size_t>(round.target.k) * d_ + round.target.l) * 2 +
              (tested == BobBasis::A ? 0 : 1)];
    const double u = stream.next_unit();
    double acc = 0.0;
    int outcome = d_ - 1;
    for (int x = 0; x < d_; ++x) {
        acc += dist[static_cast<std::size_t>(x)];
        if (u < acc) {
            outcome = x;
            break;
        }
    }
    round.bob_outcome = outcome;
    const int want = tested == BobBasis::A ? round.target.k : round.target.l;
    round.verdict = outcome == want ? Verdict::Pass : Verdict::Fail;
    return round;
}

GameRound play_round(int d, RngStream stream) {
    return GameContext(d).play_round(std::move(stream));
}

GameSummary simulate(int d, std::uint64_t n_rounds, std::uint64_t seed) {
    if (n_rounds < 1)
        throw std::invalid_argument("simulate: need at least one round");
    const GameContext ctx(d);
    const Rng rng(seed);

    std::uint64_t announced = 0;
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < n_rounds; ++i) {
        const GameRound r = ctx.play_round(rng.stream(i));
        if (r.alice_fired) {
            ++announced;
            if (r.verdict == Verdict::Pass) ++passed;
        }
    }

    GameSummary s;
    s.rounds = n_rounds;
    s.announced = announced;
    s.fire_rate = static_cast<double>(announced) / static_cast<double>(n_rounds);
    s.seed = seed;
    if (announced > 0) {
        const double p = static_cast<double>(passed) / static_cast<double>(announced);
        s.pass_rate_given_announce = p;
        s.fail_rate_given_announce = 1.0 - p;
        s.std_err_pass = std::sqrt(p * (1.0 - p) / static_cast<double>(announced));
    }
    return s;
}

double control_probability(const StateVector& psi1, const StateVector& psi2) {
    if (psi1.dim() != psi2.dim())
        throw std::invalid_argument("control_probability: dimension mismatch");
    return 0.5 * (1.0 + std::abs(inner(psi1, psi2)));
}

} // namespace qstbell
