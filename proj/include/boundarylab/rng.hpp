#pragma once

#include <cstdint>

namespace bdlab {

/// splitmix64: tiny, fully specified generator. Used instead of std
/// distributions so that streams are bit-identical across platforms and
/// derivable per index (seed, i) independently of scheduling.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Decorrelated stream for item k of a seeded run.
inline SplitMix64 derived_rng(std::uint64_t seed, std::uint64_t k) {
    SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ULL * (k + 1)));
    mix.next();
    return mix;
}

} // namespace bdlab
