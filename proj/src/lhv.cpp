#include "qstbell/lhv.hpp"

#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "qstbell/states.hpp"

namespace qstbell {

namespace {

constexpr int kEnumerateMaxDim = 4; // 2^(d^2) masks stays near 10^6

std::uint64_t mask_count(int d) {
    return std::uint64_t{1} << (d * d);
}

bool strategy_less(const LhvStrategy& x, const LhvStrategy& y) {
    return std::tuple(x.a, x.a_prime, x.fires) < std::tuple(y.a, y.a_prime, y.fires);
}

} // namespace

int score_strategy(const LhvStrategy& s, int d) {
    check_dim(d);
    if (s.a < 0 || s.a >= d || s.a_prime < 0 || s.a_prime >= d)
        throw std::invalid_argument("score_strategy: outcome assignment out of range");
    if (d * d < 64 && (s.fires >> (d * d)) != 0)
        throw std::invalid_argument("score_strategy: fire mask has bits beyond d^2");

    int score = 0;
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            if (!((s.fires >> (k * d + l)) & 1)) continue;
            score += k == s.a ? 1 : -1;
            score += l == s.a_prime ? 1 : -1;
        }
    return score;
}

LhvResult enumerate_max(int d, int threads) {
    check_dim(d);
    if (d > kEnumerateMaxDim)
        throw std::length_error("enumerate_max: 2^(d^2) strategies infeasible for d=" +
                                std::to_string(d) + "; use analytic_max");
    if (threads < 1) threads = 1;

    const std::uint64_t masks = mask_count(d);
    const int cells = d * d;

    // one independent scan per (a, a_prime) cell
    std::vector<LhvResult> per_cell(static_cast<std::size_t>(cells));
    auto scan_cell = [&](int cell) {
        const int a = cell / d;
        const int a_prime = cell % d;
        LhvResult best;
        best.max_value = 0;
        best.argmax = {a, a_prime, 0};
        best.strategies_scanned = masks;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const LhvStrategy s{a, a_prime, mask};
            const int score = score_strategy(s, d);
            if (score > best.max_value) {
                best.max_value = score;
                best.argmax = s;
            }
        }
        per_cell[static_cast<std::size_t>(cell)] = best;
    };

    if (threads == 1) {
        for (int cell = 0; cell < cells; ++cell) scan_cell(cell);
    } else {
        std::vector<std::thread> pool;
        const int workers = threads < cells ? threads : cells;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int cell = w; cell < cells; cell += workers) scan_cell(cell);
            });
        for (std::thread& t : pool) t.join();
    }

    LhvResult best = per_cell[0];
    std::uint64_t scanned = 0;
    for (const LhvResult& r : per_cell) {
        scanned += r.strategies_scanned;
        if (r.max_value > best.max_value ||
            (r.max_value == best.max_value && strategy_less(r.argmax, best.argmax)))
            best = r;
    }
    best.strategies_scanned = scanned;
    best.mode = LhvMode::Exhaustive;
    return best;
}

LhvResult analytic_max(int d) {
    check_dim(d);
    // Any fired setting (k, l) scores (k==a) + (l==a_prime) mapped to
    // {+2, 0, -2}; both matches happen only at (a, a_prime).  Firing just
    // that one setting is optimal for every (a, a_prime), so the maximum is
    // 2 and the canonical argmax mirrors the exhaustive tie-break.
    LhvResult r;
    r.max_value = 2;
    r.argmax = {0, 0, std::uint64_t{1}};
    r.strategies_scanned = static_cast<std::uint64_t>(d) * d; // one optimum per cell
    r.mode = LhvMode::Analytic;
    return r;
}

int classical_bound(int d, int threads) {
    check_dim(d);
    const LhvResult r = d <= kEnumerateMaxDim ? enumerate_max(d, threads) : analytic_max(d);
    return r.max_value;
}

} // namespace qstbell
