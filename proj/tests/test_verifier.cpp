// Verifier: bounded-hop sweeps, stretch reports, emulator mode, audits.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "hopset/constructor.hpp"
#include "hopset/errors.hpp"
#include "hopset/generators.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/params.hpp"
#include "hopset/shortest_paths.hpp"
#include "hopset/verifier.hpp"
#include "support/test_oracles.hpp"

using namespace hopset;

namespace {

Hopset empty_hopset(const WeightedGraph& g, int k) {
    Hopset h;
    h.n = g.num_vertices();
    h.k = k;
    h.seed = 0;
    h.graph_fingerprint = fingerprint(g);
    h.q.assign(k + 1, 1.0);
    return h;
}

}  // namespace

TEST_CASE("zero hop budget reaches only the source") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto h = empty_hopset(g, 1);
    auto dist = bounded_hop_distances(g, h, 0, 0);
    CHECK(dist == std::vector<double>{0.0, kInf, kInf});
}

TEST_CASE("a budget of n-1 with no shortcuts equals dijkstra exactly") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = testsupport::random_corpus_graph(seed, 60, testsupport::exact_weight_class(seed));
        auto h = empty_hopset(g, 1);
        const Vertex n = g.num_vertices();
        for (Vertex s = 0; s < std::min<Vertex>(n, 4); ++s) {
            auto bounded = bounded_hop_distances(g, h, s, n - 1);
            auto dv = dijkstra(g, s);
            CHECK(bounded == dv.dist);
        }
    }
}

TEST_CASE("bounded distances are pointwise nonincreasing in the budget") {
    auto g = testsupport::random_corpus_graph(5, 50, testsupport::WeightClass::Continuous);
    auto result = build_hopset(g, 2, 5);
    std::vector<double> prev = bounded_hop_distances(g, result.hopset, 0, 0);
    for (std::int64_t t = 1; t <= 12; ++t) {
        auto cur = bounded_hop_distances(g, result.hopset, 0, t);
        for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(cur[v] <= prev[v]);
        prev = std::move(cur);
    }
}

TEST_CASE("verification of a graph with no edges passes vacuously") {
    auto g = WeightedGraph::build(6, {});
    auto result = build_hopset(g, 1, 3);
    auto params = derive_params(1, 1.0);
    PairSamplingSpec spec;
    spec.num_pairs = 30;
    spec.num_sources = 5;
    spec.seed = 1;
    auto report = verify_hopset(g, result.hopset, params, spec);
    CHECK(report.aggregate.pairs_checked == 0);
    CHECK(report.aggregate.pairs_skipped_unreachable > 0);
    CHECK(report.passed());
}

TEST_CASE("self pairs have stretch one") {
    auto g = WeightedGraph::build(2, {{0, 1, 1.0}});
    auto result = build_hopset(g, 1, 1);
    auto h = result.hopset;
    auto bounded = bounded_hop_distances(g, h, 0, 5);
    CHECK(bounded[0] == 0.0);
}

TEST_CASE("stretch verification passes on a midsize random graph") {
    FamilyParams p;
    p.m = 900;
    auto g = generate_graph(Family::ErdosRenyi, 300, p, WeightDist::uniform(1, 100), 11);
    auto result = build_hopset(g, 2, 11);
    auto params = derive_params(2, 1.0);
    PairSamplingSpec spec;
    spec.num_pairs = 100;
    spec.num_sources = 10;
    spec.seed = 2;
    auto report = verify_hopset(g, result.hopset, params, spec);
    CHECK(report.aggregate.pairs_checked > 0);
    CHECK(report.aggregate.violations == 0);
    CHECK(report.aggregate.lower_bound_violations == 0);
    CHECK(report.aggregate.max_stretch <= 2.0 + 1e-9);
    CHECK(report.passed());
}

TEST_CASE("thread count does not change the report") {
    FamilyParams p;
    p.m = 600;
    auto g = generate_graph(Family::ErdosRenyi, 200, p, WeightDist::uniform(1, 100), 12);
    auto result = build_hopset(g, 2, 12);
    auto params = derive_params(2, 0.5);
    PairSamplingSpec spec;
    spec.num_pairs = 80;
    spec.num_sources = 8;
    spec.seed = 4;
    auto single = verify_hopset(g, result.hopset, params, spec, 1);
    auto threaded = verify_hopset(g, result.hopset, params, spec, 3);
    CHECK(report_to_json(single, "") == report_to_json(threaded, ""));
}

TEST_CASE("stratified sampling represents long-range pairs") {
    auto g = generate_graph(Family::Grid, 144, {}, WeightDist::unit(), 4);
    auto result = build_hopset(g, 1, 4);
    auto params = derive_params(1, 0.5);
    PairSamplingSpec spec;
    spec.num_pairs = 60;
    spec.num_sources = 6;
    spec.seed = 9;
    spec.mode = PairSamplingSpec::Mode::DistanceStratified;
    auto report = verify_hopset(g, result.hopset, params, spec);
    CHECK(report.passed());
    double max_exact = 0.0;
    for (const auto& rec : report.pairs) max_exact = std::max(max_exact, rec.exact);
    CHECK(max_exact >= 11.0);  // top decile of a 12x12 grid shows up
}

TEST_CASE("fingerprint mismatches are rejected") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto other = WeightedGraph::build(3, {{0, 1, 2.0}, {1, 2, 1.0}});
    auto result = build_hopset(g, 1, 1);
    auto params = derive_params(1, 1.0);
    PairSamplingSpec spec;
    CHECK_THROWS_AS(verify_hopset(other, result.hopset, params, spec), FingerprintMismatch);
    CHECK_THROWS_AS(bounded_hop_distances(other, result.hopset, 0, 3), std::exception);
}

TEST_CASE("mismatched k between params and hopset is a usage error") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto result = build_hopset(g, 1, 1);
    auto params = derive_params(2, 1.0);
    PairSamplingSpec spec;
    CHECK_THROWS_AS(verify_hopset(g, result.hopset, params, spec), UsageError);
}

TEST_CASE("min hops for an adjacent pair on a shortest path is one") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto result = build_hopset(g, 1, 1);
    auto hc = min_hops_for_stretch(g, result.hopset, 0, 1, 1.0, 10);
    CHECK(hc.met);
    CHECK(hc.hops == 1);
}

TEST_CASE("a huge stretch target is met by any single connecting edge") {
    auto g = WeightedGraph::build(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 50.0}});
    auto h = empty_hopset(g, 1);
    auto hc = min_hops_for_stretch(g, h, 0, 2, 1e9, 10);
    CHECK(hc.met);
    CHECK(hc.hops == 1);  // the heavy direct edge already satisfies the target
}

TEST_CASE("min hops on an unreachable pair is a domain error") {
    auto g = WeightedGraph::build(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    auto result = build_hopset(g, 1, 1);
    CHECK_THROWS_AS(min_hops_for_stretch(g, result.hopset, 0, 3, 1.5, 10), DomainError);
}

TEST_CASE("min hops stays within the verified budget") {
    FamilyParams p;
    p.m = 360;
    auto g = generate_graph(Family::ErdosRenyi, 120, p, WeightDist::uniform(1, 100), 13);
    auto result = build_hopset(g, 1, 13);
    auto params = derive_params(1, 1.0);
    auto dv = dijkstra(g, Vertex{0});
    for (Vertex v = 1; v < 20; ++v) {
        if (!dv.reachable(v)) continue;
        auto hc = min_hops_for_stretch(g, result.hopset, 0, v, 1.0 + params.epsilon, params.beta);
        CHECK(hc.met);
        CHECK(hc.hops <= params.beta);
    }
}

TEST_CASE("emulator distances never undershoot and small pairs are set aside") {
    auto g = generate_graph(Family::Grid, 256, {}, WeightDist::unit(), 6);
    auto result = build_hopset(g, 2, 6);
    PairSamplingSpec spec;
    spec.num_pairs = 200;
    spec.num_sources = 10;
    spec.seed = 3;
    auto report = verify_emulator(g, result.hopset, 2, 8.0, spec);
    CHECK(report.pairs_checked > 0);
    CHECK(report.lower_bound_violations == 0);
    for (const auto& rec : report.pairs) {
        CHECK(rec.exact > 2.0);
        CHECK(rec.emulator >= rec.exact);
    }
    for (const auto& rec : report.small_pairs) CHECK(rec.exact <= 2.0);
}

TEST_CASE("a direct shortcut edge gives additive stretch zero") {
    auto g = generate_graph(Family::Grid, 64, {}, WeightDist::unit(), 8);
    auto result = build_hopset(g, 1, 8);
    REQUIRE(!result.hopset.edges.empty());
    const auto& e = result.hopset.edges.front();
    auto dv = dijkstra(g, e.u);
    // The emulator distance between shortcut endpoints equals the edge weight.
    std::vector<Edge> only;
    for (const auto& he : result.hopset.edges) only.push_back({he.u, he.v, he.w});
    auto emu = WeightedGraph::build(g.num_vertices(), std::move(only));
    auto ev = dijkstra(emu, e.u);
    CHECK(ev.dist[e.v] == e.w);
    CHECK(ev.dist[e.v] == dv.dist[e.v]);
}

TEST_CASE("emulator verification rejects weighted graphs") {
    FamilyParams p;
    p.m = 60;
    auto g = generate_graph(Family::ErdosRenyi, 40, p, WeightDist::uniform(1, 10), 2);
    auto result = build_hopset(g, 1, 2);
    PairSamplingSpec spec;
    CHECK_THROWS_AS(verify_emulator(g, result.hopset, 1, 8.0, spec), UsageError);
}

TEST_CASE("weight audit passes clean hopsets and flags tampering") {
    FamilyParams p;
    p.m = 240;
    auto g = generate_graph(Family::ErdosRenyi, 80, p, WeightDist::uniform(1, 100), 21);
    auto result = build_hopset(g, 2, 21);
    CHECK(audit_edge_weights(g, result.hopset) == 0);

    auto tampered = result.hopset;
    REQUIRE(!tampered.edges.empty());
    tampered.edges[tampered.edges.size() / 2].w *= 1.5;
    CHECK(audit_edge_weights(g, tampered) == 1);
}

TEST_CASE("deflating a weight trips the lower bound") {
    FamilyParams p;
    p.m = 240;
    auto g = generate_graph(Family::ErdosRenyi, 80, p, WeightDist::uniform(1, 100), 22);
    auto result = build_hopset(g, 1, 22);
    auto params = derive_params(1, 1.0);

    auto tampered = result.hopset;
    REQUIRE(!tampered.edges.empty());
    tampered.edges.front().w = 0.0;  // claims two far vertices are at distance zero

    const Vertex u = tampered.edges.front().u;
    auto exact = dijkstra(g, u);
    auto bounded = bounded_hop_distances(g, tampered, u, params.beta);
    const Vertex v = tampered.edges.front().v;
    CHECK(bounded[v] < exact.dist[v] * (1.0 - 1e-9));
}

TEST_CASE("stretch report serializes to JSON and CSV") {
    FamilyParams p;
    p.m = 150;
    auto g = generate_graph(Family::ErdosRenyi, 60, p, WeightDist::uniform(1, 10), 14);
    auto result = build_hopset(g, 1, 14);
    auto params = derive_params(1, 0.5);
    PairSamplingSpec spec;
    spec.num_pairs = 20;
    spec.num_sources = 4;
    spec.seed = 5;
    auto report = verify_hopset(g, result.hopset, params, spec);

    const std::string json_text = report_to_json(report, R"({"command":"verify"})");
    auto j = nlohmann::json::parse(json_text);
    CHECK(j["schema_version"] == 1);
    CHECK(j["config"]["command"] == "verify");
    CHECK(j["params"]["beta"] == params.beta);
    CHECK(j["aggregate"]["violations"] == 0);
    CHECK(j["pairs"].size() == report.pairs.size());
    CHECK(j["sampling"]["seed"] == 5);

    const std::string csv = report_to_csv(report);
    std::size_t lines = 0;
    for (char c : csv) lines += (c == '\n');
    CHECK(lines == report.pairs.size() + 1);
}
