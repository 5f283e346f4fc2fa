// Graph file I/O: edge-list and DIMACS loaders, canonical serialization,
// content fingerprint.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

enum class GraphFormat { EdgeList, Dimacs };

struct LoadedGraph {
    WeightedGraph graph;
    bool remapped = false;                   // ids were sparse and got compacted
    std::vector<std::uint64_t> original_ids; // dense id -> original id, when remapped
};

// Edge-list: whitespace-separated `u v w` per line, `#` starts a comment; the
// directive `# n <count>` pins the vertex count (trailing isolated vertices).
// DIMACS shortest-path: `p sp n m` header, `a u v w` arcs (1-based, collapsed
// to undirected edges). Sparse ids are remapped densely in sorted order.
LoadedGraph load_graph(const std::string& path, GraphFormat format);
LoadedGraph parse_graph(const std::string& text, GraphFormat format);

// Canonical text: `# n <n>` then one `u v w` line per edge, sorted by (u, v),
// weights printed with round-trip-exact precision.
std::string serialize_edge_list(const WeightedGraph& g);
void save_graph(const WeightedGraph& g, const std::string& path);

// FNV-1a over the canonical serialization; keys hopsets and reports to their graph.
std::uint64_t fingerprint(const WeightedGraph& g);
std::uint64_t fnv1a(const std::string& bytes);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);
double parse_double(const std::string& token);  // throws ParseError

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hopset
