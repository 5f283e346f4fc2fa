// Level hierarchy: sampling probabilities and per-vertex level assignment
// realizing the nested vertex sets V_0 ⊇ V_1 ⊇ ... ⊇ V_k.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

struct LevelAssignment {
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<int> level;                    // per-vertex, in [0, k]
    std::vector<std::vector<Vertex>> members;  // members[i] = sorted {v : level[v] >= i}

    Vertex n() const { return static_cast<Vertex>(level.size()); }
    bool consistent() const;  // members match a rescan of level[]
};

// q_i = n^{-(2^i - 1)/(2^(k+1) - 1)} * 2^(-2^i - i + 1); q_0 is exactly 1.
// Throws UsageError unless 0 <= i <= k and n >= 2.
double sampling_probability(int i, int k, std::uint64_t n);

// Draws each vertex's level independently with P[level >= i] = q_i, capped at
// k. One uniform draw per vertex from the dedicated level stream, so the
// result is reproducible and independent of any other randomness.
LevelAssignment assign_levels(Vertex n, int k, std::uint64_t seed);

// max(1, floor(log2(log2(n))) - c); the level count at which the hopset size
// becomes linear in n. Takes n as a double so arbitrarily large counts can be
// queried. Throws UsageError for n < 4.
int auto_k(double n, int c = 1);

// Header with (n, k, seed, q_0..q_k) followed by `v level` lines.
std::string serialize(const LevelAssignment& levels);

}  // namespace hopset
