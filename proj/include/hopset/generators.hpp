// Deterministic graph generators for the test corpus and experiment grids.
#pragma once

#include <cstdint>
#include <string>

#include "hopset/graph.hpp"

namespace hopset {

enum class Family { Path, Grid, ErdosRenyi, RandomGeometric };

struct WeightDist {
    enum class Kind { Unit, Uniform };
    Kind kind = Kind::Unit;
    double lo = 1.0;
    double hi = 1.0;

    static WeightDist unit() { return {}; }
    static WeightDist uniform(double lo, double hi) { return {Kind::Uniform, lo, hi}; }
};

struct FamilyParams {
    std::uint64_t m = 0;   // erdos-renyi: edge count
    Vertex rows = 0;       // grid; 0 = infer square from n
    Vertex cols = 0;
    double radius = 0.0;   // random-geometric; 0 = default connectivity radius
};

Family parse_family(const std::string& name);
std::string family_name(Family f);

// Deterministic for fixed (family, n, params, weights, seed): topology and
// weights come from independent substreams, so the same seed yields the same
// topology under every weight distribution.
WeightedGraph generate_graph(Family family, Vertex n, const FamilyParams& params,
                             const WeightDist& weights, std::uint64_t seed);

}  // namespace hopset
