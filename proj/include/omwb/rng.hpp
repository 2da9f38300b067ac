// Deterministic randomness.
//
// All randomized campaigns draw from MT19937-64 with rejection sampling for
// bounded integers.  The engine is bit-exact across platforms and the
// rejection loop avoids the implementation-defined std distributions, so a
// seed fully determines every instance ever generated.  Per-trial streams are
// derived with SplitMix64 so trials are independent of evaluation order.
#pragma once

#include <cstdint>
#include <random>

namespace omwb {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % bound;
    }

    // Uniform integer in [lo, hi] inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Stream for trial t of a campaign seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(splitmix64(splitmix64(seed) ^ (trial + 1)));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace omwb
