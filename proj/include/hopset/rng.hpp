// Seedable random streams. One master seed fans out into named substreams so
// the level assignment, graph topology, edge weights and pair sampling never
// share a generator even when they share a seed.
#pragma once

#include <cstdint>
#include <random>

namespace hopset::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

enum class Stream : std::uint64_t {
    Levels = 1,
    Topology = 2,
    Weights = 3,
    PairSampling = 4,
    Cells = 5,
};

// Derives an independent generator for (seed, stream). Two splitmix steps
// decorrelate adjacent seeds before they reach the engine.
inline std::mt19937_64 make_stream(std::uint64_t seed, Stream stream) {
    std::uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * (1 + static_cast<std::uint64_t>(stream)));
    splitmix64(s);
    return std::mt19937_64(splitmix64(s));
}

// Per-cell seed for experiment grids: deterministic in (base, index) and
// independent of worker scheduling.
inline std::uint64_t cell_seed(std::uint64_t base_seed, std::uint64_t cell_index) {
    std::uint64_t s = base_seed ^ (0x9e3779b97f4a7c15ULL * (cell_index + 1));
    splitmix64(s);
    return splitmix64(s);
}

// Uniform in [0, 1) with 53 random bits. Hand-rolled so results do not depend
// on the standard library's distribution implementation.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform01(gen);
}

// Unbiased integer in [0, n) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

}  // namespace hopset::rng
