// Test-side brute-force oracles. Everything here is evaluated straight from
// an all-pairs distance matrix and stays independent of the construction code
// it checks.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hopset/constructor.hpp"
#include "hopset/generators.hpp"
#include "hopset/graph.hpp"
#include "hopset/hierarchy.hpp"
#include "hopset/rng.hpp"
#include "hopset/shortest_paths.hpp"

namespace testsupport {

using hopset::kInf;
using hopset::kNoVertex;
using hopset::Vertex;

using Matrix = std::vector<std::vector<double>>;

// Distance from v to the nearest level-i vertex, by scanning the matrix row.
inline double oracle_pivot_dist(const Matrix& m, const hopset::LevelAssignment& levels,
                                int i, Vertex v) {
    double best = kInf;
    if (i > levels.k) return best;
    for (Vertex u : levels.members[i]) best = std::min(best, m[v][u]);
    return best;
}

// Smallest-id minimizer among level-i vertices, kNoVertex when unreachable.
inline Vertex oracle_pivot(const Matrix& m, const hopset::LevelAssignment& levels,
                           int i, Vertex v) {
    const double best = oracle_pivot_dist(m, levels, i, v);
    if (best == kInf) return kNoVertex;
    for (Vertex u : levels.members[i]) {
        if (m[v][u] == best) return u;  // members are sorted, first hit is smallest
    }
    return kNoVertex;
}

// The strict-inequality bunch, straight from its definition.
inline std::vector<Vertex> oracle_bunch(const Matrix& m, const hopset::LevelAssignment& levels,
                                        int i, Vertex v) {
    const double threshold = i >= levels.k ? kInf : oracle_pivot_dist(m, levels, i + 1, v);
    std::vector<Vertex> bunch;
    for (Vertex u : levels.members[i]) {
        if (m[v][u] < threshold) bunch.push_back(u);
    }
    return bunch;
}

// Corpus graphs. Weight classes are chosen so that float path sums are exact
// (unit, small integers, multiples of 1/8): distance ties then compare
// bit-for-bit no matter which endpoint a search starts from, which is what
// the exact set-for-set comparisons rely on.
enum class WeightClass { Unit, SmallInt, Dyadic, Continuous };

inline hopset::WeightedGraph random_corpus_graph(std::uint64_t seed, Vertex max_n,
                                                 WeightClass wc) {
    auto gen = hopset::rng::make_stream(seed, hopset::rng::Stream::Cells);
    const Vertex n = 2 + static_cast<Vertex>(hopset::rng::uniform_below(gen, max_n - 1));

    std::vector<hopset::Edge> edges;
    const int family = static_cast<int>(hopset::rng::uniform_below(gen, 3));
    if (family == 0) {  // path plus random chords
        for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
        const auto chords = hopset::rng::uniform_below(gen, n);
        for (std::uint64_t c = 0; c < chords; ++c) {
            const auto u = static_cast<Vertex>(hopset::rng::uniform_below(gen, n));
            const auto v = static_cast<Vertex>(hopset::rng::uniform_below(gen, n));
            if (u != v) edges.push_back({u, v, 1.0});
        }
    } else if (family == 1) {  // sparse random, possibly disconnected
        const std::uint64_t m = hopset::rng::uniform_below(gen, 3ull * n) + 1;
        for (std::uint64_t c = 0; c < m; ++c) {
            const auto u = static_cast<Vertex>(hopset::rng::uniform_below(gen, n));
            const auto v = static_cast<Vertex>(hopset::rng::uniform_below(gen, n));
            if (u != v) edges.push_back({u, v, 1.0});
        }
    } else {  // denser random
        const std::uint64_t m = hopset::rng::uniform_below(gen, 6ull * n) + n;
        for (std::uint64_t c = 0; c < m; ++c) {
            const auto u = static_cast<Vertex>(hopset::rng::uniform_below(gen, n));
            const auto v = static_cast<Vertex>(hopset::rng::uniform_below(gen, n));
            if (u != v) edges.push_back({u, v, 1.0});
        }
    }

    for (auto& e : edges) {
        switch (wc) {
            case WeightClass::Unit: break;
            case WeightClass::SmallInt:
                e.w = 1.0 + static_cast<double>(hopset::rng::uniform_below(gen, 10));
                break;
            case WeightClass::Dyadic:
                e.w = static_cast<double>(8 + hopset::rng::uniform_below(gen, 73)) / 8.0;
                break;
            case WeightClass::Continuous:
                e.w = hopset::rng::uniform_real(gen, 1.0, 100.0);
                break;
        }
    }
    return hopset::WeightedGraph::build(n, std::move(edges));
}

inline WeightClass exact_weight_class(std::uint64_t index) {
    switch (index % 3) {
        case 0: return WeightClass::Unit;
        case 1: return WeightClass::SmallInt;
        default: return WeightClass::Dyadic;
    }
}

}  // namespace testsupport
