#pragma once

#include <cstdint>
#include <random>

namespace bplab {

// Seedable, portable random stream. mt19937_64 output is pinned by the
// standard, and we map to doubles ourselves, so a given seed produces the
// same draw sequence on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double strictly inside (lo, hi).
    double uniform_open(double lo, double hi) {
        double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling keeps the stream portable and unbiased.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

// Derives an independent stream for a (purpose, index) pair without
// consuming draws from the parent seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace bplab
