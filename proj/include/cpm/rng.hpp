#pragma once

#include <cstdint>

namespace cpm {

// splitmix64: seedable, tiny, and bit-identical on every platform, unlike the
// standard <random> distributions. Substreams are derived by folding tag
// words through the same finalizer, one substream per independent sampling
// task (e.g. one per block pair in the planted-partition generator), so
// results do not depend on traversal order or thread count.

inline std::uint64_t splitmix_finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ull;

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t word) {
    return splitmix_finalize(seed + kSplitMixGamma * (word + 1));
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t w1, std::uint64_t w2) {
    return derive_stream(derive_stream(seed, w1), w2);
}

struct Rng {
    std::uint64_t state = 0;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += kSplitMixGamma;
        return splitmix_finalize(state);
    }

    double uniform() {  // [0, 1), 53-bit resolution
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint32_t below(std::uint32_t bound) {  // [0, bound), bound >= 1
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

}  // namespace cpm
