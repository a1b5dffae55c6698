#include <doctest.h>

#include <cmath>
#include <set>

#include "qstbell/rng.hpp"

using namespace qstbell;

TEST_CASE("rng: fixed seed reproduces the exact draw sequence") {
    RngStream a(42, 0);
    RngStream b(42, 0);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("rng: different seeds and streams decorrelate") {
    RngStream s0(42, 0);
    RngStream s1(42, 1);
    RngStream t0(43, 0);
    int same01 = 0, same0t = 0;
    for (int i = 0; i < 64; ++i) {
        const auto x = s0.next_u64();
        if (x == s1.next_u64()) ++same01;
        if (x == t0.next_u64()) ++same0t;
    }
    CHECK(same01 == 0);
    CHECK(same0t == 0);
}

TEST_CASE("rng: unit draws live in [0,1) with sane moments") {
    RngStream s(7, 0);
    const int n = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = s.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 0.005);          // ~5.5 sigma band
    CHECK(std::abs(var - 1.0 / 12.0) < 0.005);
}

TEST_CASE("rng: next_below covers its range uniformly") {
    RngStream s(11, 3);
    const int n = 90000;
    int counts[9] = {0};
    for (int i = 0; i < n; ++i) {
        const auto v = s.next_below(9);
        REQUIRE(v < 9);
        ++counts[v];
    }
    for (int c : counts) CHECK(std::abs(c - n / 9) < 500);
}

TEST_CASE("rng: gaussian draws have near standard moments") {
    RngStream s(5, 0);
    const int n = 50000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = s.next_gaussian();
        sum += g;
        sumsq += g * g;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(std::abs(sumsq / n - 1.0) < 0.05);
}

TEST_CASE("rng: draw counter documents consumption") {
    RngStream s(1, 0);
    CHECK(s.draws_consumed() == 0);
    s.next_u64();
    s.next_unit();
    s.next_below(5);
    CHECK(s.draws_consumed() == 3);
    s.next_gaussian();
    CHECK(s.draws_consumed() == 5); // Box-Muller takes two
}
