// Counter-based random number generation.
//
// Every draw is a pure function of (seed, stream index, draw counter), so a
// run is reproducible from its seed alone and independent streams can be
// handed out per round / per trial without any shared state.  The mixer is
// the splitmix64 finalizer over a Weyl sequence.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qstbell {

namespace detail {

constexpr std::uint64_t kWeylStep = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace detail

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index)
        : key_(detail::mix64(detail::mix64(seed + detail::kWeylStep) ^
                             (stream_index + 1) * detail::kWeylStep)) {}

    // next_* advance the draw counter by the documented number of draws.

    // 1 draw
    std::uint64_t next_u64() {
        counter_ += 1;
        return detail::mix64(key_ + counter_ * detail::kWeylStep);
    }

    // 1 draw, uniform in [0, 1) with 53-bit resolution
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // 1 draw, uniform in [0, n); n >= 1
    std::uint32_t next_below(std::uint32_t n) {
        // multiply-shift map of the full 64-bit draw onto [0, n)
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // 2 draws, standard normal (Box-Muller, no caching)
    double next_gaussian() {
        double u1 = next_unit();
        double u2 = next_unit();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    std::uint64_t draws_consumed() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Root generator: hands out one independent stream per index.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    RngStream stream(std::uint64_t index) const { return RngStream(seed_, index); }
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

} // namespace qstbell
