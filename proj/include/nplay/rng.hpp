#pragma once

// Deterministic randomness for the Monte Carlo engine.
//
// Reproducibility contract: given (seed, block index), the draw sequence is
// identical on every platform and for every worker count.  mt19937_64 output
// is pinned by the standard; block seeds come from SplitMix64 so nearby
// indices give decorrelated streams.  std::uniform_int_distribution is
// implementation-defined, so bounded draws use explicit rejection instead.

#include <cstdint>
#include <random>

namespace nplay {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

/// Unbiased uniform draw from [0, bound), bound >= 1.
inline std::uint64_t bounded_rand(std::mt19937_64& g, std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = g();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace nplay
