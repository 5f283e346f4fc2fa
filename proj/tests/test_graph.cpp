// Graph core: construction invariants, loaders, exact oracles, generators.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopset/errors.hpp"
#include "hopset/generators.hpp"
#include "hopset/graph.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/shortest_paths.hpp"
#include "support/test_oracles.hpp"

using namespace hopset;

TEST_CASE("build collapses parallel edges to the minimum weight") {
    auto g = WeightedGraph::build(3, {{0, 1, 2.5}, {1, 0, 3.0}, {1, 2, 1.0}});
    CHECK(g.num_edges() == 2);
    CHECK(g.edges()[0].w == 2.5);
    CHECK(g.collapsed_parallel_edges() == 1);
    CHECK(g.consistent());
}

TEST_CASE("build drops self-loops and counts them") {
    auto g = WeightedGraph::build(2, {{0, 0, 1.0}, {0, 1, 1.0}});
    CHECK(g.num_edges() == 1);
    CHECK(g.dropped_self_loops() == 1);
}

TEST_CASE("build rejects negative and non-finite weights") {
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, -1.0}}), UsageError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, kInf}}), UsageError);
    CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 5, 1.0}}), UsageError);
}

TEST_CASE("edge-list loader transcribes simple files") {
    auto loaded = parse_graph("0 1 2.5\n1 2 1.0\n", GraphFormat::EdgeList);
    CHECK(loaded.graph.num_vertices() == 3);
    CHECK(loaded.graph.num_edges() == 2);
    CHECK_FALSE(loaded.remapped);
}

TEST_CASE("edge-list loader collapses opposite-direction duplicates") {
    auto loaded = parse_graph("0 1 2.5\n1 0 3.0\n", GraphFormat::EdgeList);
    CHECK(loaded.graph.num_edges() == 1);
    CHECK(loaded.graph.edges()[0].w == 2.5);
}

TEST_CASE("edge-list loader rejects negative weights") {
    CHECK_THROWS_AS(parse_graph("0 1 -1\n", GraphFormat::EdgeList), UsageError);
}

TEST_CASE("edge-list loader reports the offending line") {
    try {
        parse_graph("0 1 1.0\n0 two 1.0\n", GraphFormat::EdgeList);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
    }
}

TEST_CASE("edge-list loader remaps sparse ids densely") {
    auto loaded = parse_graph("0 7 1.0\n7 9 2.0\n", GraphFormat::EdgeList);
    CHECK(loaded.remapped);
    CHECK(loaded.graph.num_vertices() == 3);
    REQUIRE(loaded.original_ids.size() == 3);
    CHECK(loaded.original_ids[0] == 0);
    CHECK(loaded.original_ids[1] == 7);
    CHECK(loaded.original_ids[2] == 9);
}

TEST_CASE("edge-list round-trip is the identity on the collapsed graph") {
    auto first = parse_graph("2 1 0.125\n0 1 3\n0 1 4\n# n 6\n", GraphFormat::EdgeList);
    const std::string text = serialize_edge_list(first.graph);
    auto second = parse_graph(text, GraphFormat::EdgeList);
    CHECK(serialize_edge_list(second.graph) == text);
    CHECK(second.graph.num_vertices() == 6);
    CHECK(fingerprint(second.graph) == fingerprint(first.graph));
}

TEST_CASE("dimacs loader remaps 1-based ids and deduplicates arcs") {
    const std::string text =
        "c tiny\np sp 4 4\na 1 2 1.5\na 2 1 2.5\na 2 3 1\na 3 4 2\n";
    auto loaded = parse_graph(text, GraphFormat::Dimacs);
    CHECK(loaded.graph.num_vertices() == 4);
    CHECK(loaded.graph.num_edges() == 3);
    CHECK(loaded.graph.edges()[0].u == 0);
    CHECK(loaded.graph.edges()[0].w == 1.5);
    CHECK_THROWS_AS(parse_graph("a 1 2 3\n", GraphFormat::Dimacs), ParseError);
}

TEST_CASE("dijkstra on a unit path") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto dv = dijkstra(g, Vertex{0});
    CHECK(dv.dist == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(dv.parent[2] == 1);
}

TEST_CASE("multi-source dijkstra takes the minimum over sources") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    const Vertex sources[2] = {0, 2};
    auto dv = dijkstra(g, std::span<const Vertex>(sources, 2));
    CHECK(dv.dist == std::vector<double>{0.0, 1.0, 0.0});
    CHECK(dv.root[1] == 0);  // tie between sources 0 and 2 goes to the smaller id
}

TEST_CASE("dijkstra marks the other component unreachable") {
    auto g = WeightedGraph::build(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    auto dv = dijkstra(g, Vertex{0});
    CHECK(dv.dist[2] == kInf);
    CHECK(dv.dist[3] == kInf);
    CHECK_FALSE(dv.reachable(2));
}

TEST_CASE("dijkstra rejects an empty source set") {
    auto g = WeightedGraph::build(2, {{0, 1, 1.0}});
    CHECK_THROWS_AS(dijkstra(g, std::span<const Vertex>{}), UsageError);
}

TEST_CASE("dijkstra satisfies the settled condition on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = testsupport::random_corpus_graph(seed, 80, testsupport::WeightClass::Continuous);
        auto dv = dijkstra(g, Vertex{0});
        for (const auto& e : g.edges()) {
            CHECK(dv.dist[e.v] <= dv.dist[e.u] + e.w);
            CHECK(dv.dist[e.u] <= dv.dist[e.v] + e.w);
        }
    }
}

TEST_CASE("all-pairs distances on the lopsided triangle") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 5.0}});
    auto m = all_pairs_distances(g);
    CHECK(m[0][1] == 1.0);
    CHECK(m[1][2] == 1.0);
    CHECK(m[0][2] == 2.0);  // the two-edge route beats the direct heavy edge
    CHECK(m[0][0] == 0.0);
}

TEST_CASE("all-pairs distances of a single vertex") {
    auto g = WeightedGraph::build(1, {});
    auto m = all_pairs_distances(g);
    REQUIRE(m.size() == 1);
    CHECK(m[0][0] == 0.0);
}

TEST_CASE("all-pairs distances refuses oversized graphs") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}});
    CHECK_THROWS_AS(all_pairs_distances(g, 2), CapacityError);
}

TEST_CASE("all-pairs matches dijkstra from every source, exactly") {
    // Exactly representable weights keep path sums independent of summation
    // order, so the two independent implementations must agree bit-for-bit.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = testsupport::random_corpus_graph(seed, 200, testsupport::exact_weight_class(seed));
        auto m = all_pairs_distances(g);
        const Vertex n = g.num_vertices();
        for (Vertex s = 0; s < n; ++s) {
            auto dv = dijkstra(g, s);
            for (Vertex v = 0; v < n; ++v) CHECK(m[s][v] == dv.dist[v]);
        }
        for (Vertex u = 0; u < n; ++u) {
            CHECK(m[u][u] == 0.0);
            for (Vertex v = u + 1; v < n; ++v) CHECK(m[u][v] == m[v][u]);
        }
    }
}

TEST_CASE("all-pairs tracks dijkstra within tolerance on continuous weights") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        auto g = testsupport::random_corpus_graph(seed, 120, testsupport::WeightClass::Continuous);
        auto m = all_pairs_distances(g);
        for (Vertex s = 0; s < g.num_vertices(); ++s) {
            auto dv = dijkstra(g, s);
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                if (m[s][v] == kInf) {
                    CHECK(dv.dist[v] == kInf);
                } else {
                    CHECK(m[s][v] == doctest::Approx(dv.dist[v]).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("path generator emits n-1 unit edges") {
    auto g = generate_graph(Family::Path, 5, {}, WeightDist::unit(), 1);
    CHECK(g.num_edges() == 4);
    for (const auto& e : g.edges()) CHECK(e.w == 1.0);
    auto dv = dijkstra(g, Vertex{0});
    CHECK(dv.dist[4] == 4.0);  // connected
}

TEST_CASE("grid generator: 3x3 has 12 edges and is connected") {
    auto g = generate_graph(Family::Grid, 9, {}, WeightDist::unit(), 1);
    CHECK(g.num_edges() == 12);
    auto dv = dijkstra(g, Vertex{0});
    for (Vertex v = 0; v < 9; ++v) CHECK(dv.reachable(v));
}

TEST_CASE("erdos-renyi generator is deterministic for a fixed seed") {
    FamilyParams p;
    p.m = 300;
    auto a = generate_graph(Family::ErdosRenyi, 100, p, WeightDist::uniform(1, 100), 7);
    auto b = generate_graph(Family::ErdosRenyi, 100, p, WeightDist::uniform(1, 100), 7);
    CHECK(serialize_edge_list(a) == serialize_edge_list(b));
    CHECK(a.num_edges() == 300);

    auto c = generate_graph(Family::ErdosRenyi, 100, p, WeightDist::uniform(1, 100), 8);
    CHECK(serialize_edge_list(a) != serialize_edge_list(c));
}

TEST_CASE("same seed yields the same topology under different weights") {
    FamilyParams p;
    p.m = 200;
    auto unit = generate_graph(Family::ErdosRenyi, 80, p, WeightDist::unit(), 3);
    auto weighted = generate_graph(Family::ErdosRenyi, 80, p, WeightDist::uniform(1, 100), 3);
    REQUIRE(unit.num_edges() == weighted.num_edges());
    for (std::size_t i = 0; i < unit.num_edges(); ++i) {
        CHECK(unit.edges()[i].u == weighted.edges()[i].u);
        CHECK(unit.edges()[i].v == weighted.edges()[i].v);
    }
}

TEST_CASE("generator parameter validation") {
    FamilyParams p;
    p.m = 100;  // over n(n-1)/2 for n=5
    CHECK_THROWS_AS(generate_graph(Family::ErdosRenyi, 5, p, WeightDist::unit(), 1), UsageError);
    FamilyParams bad_grid;
    bad_grid.rows = 2;
    bad_grid.cols = 3;
    CHECK_THROWS_AS(generate_graph(Family::Grid, 7, bad_grid, WeightDist::unit(), 1), UsageError);
    CHECK_THROWS_AS(generate_graph(Family::Grid, 8, {}, WeightDist::unit(), 1), UsageError);
}

TEST_CASE("random geometric graphs are usually connected at the default radius") {
    auto g = generate_graph(Family::RandomGeometric, 400, {}, WeightDist::unit(), 5);
    auto dv = dijkstra(g, Vertex{0});
    std::size_t reached = 0;
    for (Vertex v = 0; v < 400; ++v) reached += dv.reachable(v);
    CHECK(reached == 400);
}

TEST_CASE("fingerprint tracks content") {
    auto a = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto b = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 2.0}});
    CHECK(fingerprint(a) != fingerprint(b));
    auto c = WeightedGraph::build(3, {{1, 2, 1.0}, {0, 1, 1.0}});
    CHECK(fingerprint(a) == fingerprint(c));  // canonical form ignores input order
}

TEST_CASE("format_double round-trips exactly") {
    for (double x : {0.0, 1.0, 2.5, 0.1, 1e-300, 12345.6789, 0x1.fffffffffffffp+1023}) {
        CHECK(parse_double(format_double(x)) == x);
    }
}
