// Local hidden variable side of the inequality.  A deterministic strategy
// pre-assigns Bob's answer for each basis and lets Alice choose which of the
// d^2 settings to fire on; the best achievable sum is exactly 2 because only
// the doubly matched setting scores +2 and every other fired setting scores
// 0 or -2.

#pragma once

#include <cstdint>

namespace qstbell {

// fires is a bitmask over the d^2 settings, bit (k*d + l) for setting (k, l).
struct LhvStrategy {
    int a = 0;        // Bob's predetermined outcome in the computational basis
    int a_prime = 0;  // Bob's predetermined outcome in the Fourier basis
    std::uint64_t fires = 0;
};

enum class LhvMode { Exhaustive, Analytic };

struct LhvResult {
    int max_value = 0;
    LhvStrategy argmax;
    std::uint64_t strategies_scanned = 0;
    LhvMode mode = LhvMode::Exhaustive;
};

// Contribution of a deterministic strategy to the inequality sum: each fired
// setting adds (+1 or -1) for the computational-basis pair and (+1 or -1)
// for the Fourier-basis pair, so every term is even.
int score_strategy(const LhvStrategy& s, int d);

// Scans all d^2 * 2^(d^2) deterministic strategies.  Limited to d <= 4;
// larger dimensions are rejected with a pointer to analytic_max.  Ties on
// the maximum resolve to the lexicographically smallest (a, a_prime, fires).
LhvResult enumerate_max(int d, int threads = 1);

// Constructive bound without enumeration: for fixed (a, a_prime) only the
// setting (a, a_prime) itself has positive contribution, so the optimum
// fires exactly that one and scores 2.
LhvResult analytic_max(int d);

// Bound used by the inequality reports: exhaustive where feasible.
int classical_bound(int d, int threads = 1);

} // namespace qstbell
