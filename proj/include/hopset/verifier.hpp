// Independent validation of a built hopset: bounded-hop distances over the
// augmented graph, stretch checks against the exact oracle, emulator-mode
// additive stretch on unweighted graphs, and edge-weight audits.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopset/constructor.hpp"
#include "hopset/graph.hpp"
#include "hopset/params.hpp"

namespace hopset {

struct PairSamplingSpec {
    enum class Mode { Uniform, DistanceStratified };
    std::size_t num_pairs = 200;
    std::size_t num_sources = 20;  // pairs are grouped per source for shared sweeps
    std::uint64_t seed = 0;
    Mode mode = Mode::Uniform;
};

struct PairRecord {
    Vertex u;
    Vertex v;
    double exact;
    double bounded;      // distance within the hop budget over the augmented graph
    double stretch;      // bounded / exact; 1 when both are zero
    std::int64_t hops;   // rounds needed to reach the stretch bound; -1 = not measured
};

struct StretchAggregate {
    double max_stretch = 1.0;
    double mean_stretch = 1.0;
    std::size_t violations = 0;              // stretch above (1 + epsilon) * (1 + tol)
    std::size_t lower_bound_violations = 0;  // bounded below exact * (1 - tol)
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped_unreachable = 0;
};

inline constexpr double kStretchTolerance = 1e-9;  // relative, on all stretch comparisons

struct StretchReport {
    int schema_version = 1;
    HopsetParams params;
    SizeStats size;
    PairSamplingSpec sampling;
    std::uint64_t graph_fingerprint = 0;
    Vertex n = 0;
    std::size_t graph_edges = 0;
    std::size_t hopset_edges = 0;
    std::vector<PairRecord> pairs;  // sorted by (u, v)
    StretchAggregate aggregate;

    bool passed() const {
        return aggregate.violations == 0 && aggregate.lower_bound_violations == 0;
    }
};

// Distance from `source` using at most `beta` edges of the graph augmented
// with the hopset, computed by synchronous relaxation rounds. Rounds stop
// early once a fixpoint is reached; the result is exact for every budget.
std::vector<double> bounded_hop_distances(const WeightedGraph& g, const Hopset& h,
                                          Vertex source, std::int64_t beta);

// Samples pairs, compares exact distance against the bounded-hop distance at
// params.beta, and aggregates. Per-source checks are independent; `threads`
// fans them out and the merged report is identical for every thread count.
// Throws FingerprintMismatch when the hopset was built from a different
// graph, UsageError when k differs.
StretchReport verify_hopset(const WeightedGraph& g, const Hopset& h,
                            const HopsetParams& params, const PairSamplingSpec& sampling,
                            int threads = 1);

struct HopCount {
    std::int64_t hops;
    bool met;  // false when the target was not reached within the cap
};

// Smallest round count t with dist_t(u, v) <= target_stretch * dist(u, v),
// capped at `cap`. Throws DomainError for unreachable pairs.
HopCount min_hops_for_stretch(const WeightedGraph& g, const Hopset& h, Vertex u, Vertex v,
                              double target_stretch, std::int64_t cap);

struct EmulatorRecord {
    Vertex u;
    Vertex v;
    double exact;     // distance in the unweighted base graph
    double emulator;  // distance using hopset edges only
    double additive;  // emulator - exact
    double ratio;     // additive / (k * exact^(1 - 1/k))
};

struct EmulatorReport {
    int schema_version = 1;
    int k = 0;
    double budget = 0.0;  // pass bound on the normalized ratio
    double d_min = 2.0;   // pairs with exact <= d_min are reported, not scored
    std::uint64_t graph_fingerprint = 0;
    PairSamplingSpec sampling;
    std::vector<EmulatorRecord> pairs;        // exact > d_min, sorted by (u, v)
    std::vector<EmulatorRecord> small_pairs;  // excluded short-range pairs
    double max_ratio = 0.0;
    std::size_t lower_bound_violations = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped_unreachable = 0;

    bool passed() const { return max_ratio <= budget && lower_bound_violations == 0; }
};

// Emulator-mode check: distances over hopset edges ONLY, base graph must be
// unit-weight (else UsageError). Additive stretch is normalized by
// k * d^(1 - 1/k) and compared against `budget`.
EmulatorReport verify_emulator(const WeightedGraph& g, const Hopset& h, int k, double budget,
                               const PairSamplingSpec& sampling, double d_min = 2.0);

// Recomputes each edge weight with a fresh Dijkstra from its first endpoint
// and counts exact mismatches. Searches are shared per distinct endpoint.
std::size_t audit_edge_weights(const WeightedGraph& g, const Hopset& h);

// JSON report (schema_version, config echo, params, size stats, pairs,
// aggregate) and a flat CSV of the pairs table.
std::string report_to_json(const StretchReport& report, const std::string& config_echo);
std::string report_to_csv(const StretchReport& report);
std::string report_to_json(const EmulatorReport& report, const std::string& config_echo);

}  // namespace hopset
