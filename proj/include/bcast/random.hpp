#pragma once

#include <cstdint>

namespace bcast {

/// xorshift64* seeded through splitmix64. Fixed so that traces generated from a
/// seed are reproducible across platforms and standard libraries.
class Xorshift64Star {
public:
    static constexpr const char* kName = "xorshift64*/splitmix64";

    explicit Xorshift64Star(std::uint64_t seed) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        state_ = z ^ (z >> 31);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform integer in [lo, hi] (inclusive). Uses rejection to avoid modulo bias.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) {
        return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
    }

private:
    std::uint64_t state_;
};

}  // namespace bcast
