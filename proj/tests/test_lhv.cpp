#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qstbell/lhv.hpp"
#include "qstbell/rng.hpp"

using namespace qstbell;

TEST_CASE("score_strategy: hand-checked examples at d=3") {
    // fire only on the doubly matched setting: +2
    LhvStrategy best{1, 2, 0};
    best.fires = 1ull << (1 * 3 + 2);
    CHECK(score_strategy(best, 3) == 2);

    // fire on a half-matched setting: +1 - 1 = 0
    LhvStrategy half{1, 2, 0};
    half.fires = 1ull << (1 * 3 + 0);
    CHECK(score_strategy(half, 3) == 0);

    // fire on a doubly mismatched setting: -2
    LhvStrategy worst{1, 2, 0};
    worst.fires = 1ull << (0 * 3 + 0);
    CHECK(score_strategy(worst, 3) == -2);

    // never fire: 0
    CHECK(score_strategy(LhvStrategy{0, 0, 0}, 3) == 0);

    // fire everywhere at d=2: the row and column matches cancel the misses
    LhvStrategy all2{0, 0, 0xF};
    CHECK(score_strategy(all2, 2) == 0);
}

TEST_CASE("score_strategy: every score is even") {
    RngStream s(401, 0);
    for (int rep = 0; rep < 2000; ++rep) {
        const int d = 2 + static_cast<int>(s.next_below(3)); // 2..4
        LhvStrategy strat;
        strat.a = static_cast<int>(s.next_below(static_cast<std::uint64_t>(d)));
        strat.a_prime = static_cast<int>(s.next_below(static_cast<std::uint64_t>(d)));
        const std::uint64_t cells = static_cast<std::uint64_t>(d) * d;
        strat.fires = s.next_u64() & ((cells == 64 ? ~0ull : (1ull << cells) - 1));
        CHECK(score_strategy(strat, d) % 2 == 0);
    }
}

TEST_CASE("score_strategy: rejects out-of-range assignments and stray bits") {
    CHECK_THROWS_AS(score_strategy(LhvStrategy{3, 0, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(score_strategy(LhvStrategy{0, -1, 0}, 3), std::invalid_argument);
    LhvStrategy stray{0, 0, 1ull << 9}; // bit 9 is outside the 3x3 grid
    CHECK_THROWS_AS(score_strategy(stray, 3), std::invalid_argument);
}

TEST_CASE("enumerate_max: d=2 scans 64 strategies and finds the bound 2") {
    const LhvResult r = enumerate_max(2);
    CHECK(r.max_value == 2);
    CHECK(r.strategies_scanned == 64);
    CHECK(r.mode == LhvMode::Exhaustive);
    // lexicographically smallest argmax: a=0, a'=0, fire only setting (0,0)
    CHECK(r.argmax.a == 0);
    CHECK(r.argmax.a_prime == 0);
    CHECK(r.argmax.fires == 1);
    CHECK(score_strategy(r.argmax, 2) == 2);
}

TEST_CASE("enumerate_max: d=3 scans 4608 strategies and still tops out at 2") {
    const LhvResult r = enumerate_max(3);
    CHECK(r.max_value == 2);
    CHECK(r.strategies_scanned == 4608); // 9 * 512
    CHECK(r.argmax.a == 0);
    CHECK(r.argmax.a_prime == 0);
    CHECK(r.argmax.fires == 1);
}

TEST_CASE("enumerate_max: agrees with the constructive bound where both run") {
    for (int d : {2, 3, 4}) {
        const LhvResult ex = enumerate_max(d);
        const LhvResult an = analytic_max(d);
        CHECK(ex.max_value == an.max_value);
        CHECK(an.max_value == 2);
        CHECK(an.mode == LhvMode::Analytic);
        CHECK(score_strategy(an.argmax, d) == 2);
    }
}

TEST_CASE("enumerate_max: refuses dimensions past the feasibility cap") {
    try {
        enumerate_max(5);
        FAIL("expected a capacity rejection");
    } catch (const std::length_error& e) {
        // the message must point the caller at the constructive alternative
        CHECK(std::string(e.what()).find("analytic_max") != std::string::npos);
    }
}

TEST_CASE("enumerate_max: thread count does not change the result") {
    const LhvResult one = enumerate_max(4, 1);
    const LhvResult four = enumerate_max(4, 4);
    CHECK(one.max_value == four.max_value);
    CHECK(one.strategies_scanned == four.strategies_scanned);
    CHECK(one.argmax.a == four.argmax.a);
    CHECK(one.argmax.a_prime == four.argmax.a_prime);
    CHECK(one.argmax.fires == four.argmax.fires);
}

TEST_CASE("analytic_max: counts the full strategy space it reasons over") {
    const LhvResult r = analytic_max(3);
    CHECK(r.strategies_scanned == 9); // the (a, a') pairs
    CHECK(r.argmax.fires == (1ull << (0 * 3 + 0)));
}

TEST_CASE("random strategies never beat the bound at large d") {
    // the exhaustive scan is infeasible at d=5 and d=6, so sample instead;
    // dense random fire masks score far below the bound on average, so the
    // tightness at these dimensions is confirmed constructively
    RngStream s(402, 0);
    for (int d : {5, 6}) {
        const std::uint64_t cells = static_cast<std::uint64_t>(d) * d;
        for (int rep = 0; rep < 1000000; ++rep) {
            LhvStrategy strat;
            strat.a = static_cast<int>(s.next_below(static_cast<std::uint64_t>(d)));
            strat.a_prime = static_cast<int>(s.next_below(static_cast<std::uint64_t>(d)));
            std::uint64_t mask = s.next_u64();
            if (cells < 64) mask &= (1ull << cells) - 1;
            strat.fires = mask;
            CHECK(score_strategy(strat, d) <= 2);
        }
        CHECK(score_strategy(analytic_max(d).argmax, d) == 2);
    }
}

TEST_CASE("mixtures of deterministic strategies stay below the bound") {
    // convexity check: any mixture value is a convex combination of integer
    // scores, each at most 2
    RngStream s(403, 0);
    const int d = 3;
    double mix = 0.0, wsum = 0.0;
    for (int rep = 0; rep < 500; ++rep) {
        LhvStrategy strat;
        strat.a = static_cast<int>(s.next_below(3));
        strat.a_prime = static_cast<int>(s.next_below(3));
        strat.fires = s.next_u64() & ((1ull << 9) - 1);
        const double w = s.next_unit();
        mix += w * score_strategy(strat, d);
        wsum += w;
    }
    CHECK(mix / wsum <= 2.0);
}

TEST_CASE("classical_bound: exhaustive below the cap, constructive beyond it") {
    CHECK(classical_bound(2) == 2);
    CHECK(classical_bound(3) == 2);
    CHECK(classical_bound(4, 4) == 2);
    CHECK(classical_bound(5) == 2);
    CHECK(classical_bound(6) == 2);
}
