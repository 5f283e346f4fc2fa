#include "hopset/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hopset/errors.hpp"

namespace hopset {

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

double parse_double(const std::string& token) {
    if (token == "inf") return kInf;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("not a real number: '" + token + "'");
    }
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

struct RawEdge {
    std::uint64_t u, v;
    double w;
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

std::uint64_t parse_id(const std::string& token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("not a vertex id: '" + token + "'", line_no);
    }
    return value;
}

LoadedGraph assemble(std::vector<RawEdge> raw, std::uint64_t min_n, std::size_t forced_n,
                     bool ids_one_based) {
    if (ids_one_based) {
        for (auto& e : raw) {
            if (e.u == 0 || e.v == 0) throw ParseError("DIMACS ids are 1-based; got 0");
            --e.u;
            --e.v;
        }
    }

    // Decide whether the id space is already dense 0..max.
    std::vector<std::uint64_t> ids;
    ids.reserve(raw.size() * 2);
    for (const auto& e : raw) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    LoadedGraph out;
    std::uint64_t n = 0;
    if (forced_n > 0 || ids.empty() || ids.back() + 1 == ids.size()) {
        n = forced_n > 0 ? forced_n : (ids.empty() ? 0 : ids.back() + 1);
        if (forced_n > 0 && !ids.empty() && ids.back() >= forced_n) {
            throw ParseError("vertex id " + std::to_string(ids.back()) +
                             " exceeds declared vertex count " + std::to_string(forced_n));
        }
    } else {
        out.remapped = true;
        out.original_ids = ids;
        std::map<std::uint64_t, std::uint64_t> to_dense;
        for (std::size_t i = 0; i < ids.size(); ++i) to_dense[ids[i]] = i;
        for (auto& e : raw) {
            e.u = to_dense[e.u];
            e.v = to_dense[e.v];
        }
        n = ids.size();
    }
    n = std::max<std::uint64_t>(n, min_n);
    if (n > std::numeric_limits<Vertex>::max()) throw CapacityError("vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        if (e.w < 0.0) {
            throw UsageError("negative edge weight rejected: " + format_double(e.w));
        }
        edges.push_back({static_cast<Vertex>(e.u), static_cast<Vertex>(e.v), e.w});
    }
    out.graph = WeightedGraph::build(static_cast<Vertex>(n), std::move(edges));
    return out;
}

LoadedGraph parse_edge_list(const std::string& text) {
    std::vector<RawEdge> raw;
    std::uint64_t min_n = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0][0] == '#') {
            // `# n <count>` pins the vertex count; other comments are ignored.
            if (tokens.size() >= 3 && tokens[0] == "#" && tokens[1] == "n") {
                min_n = parse_id(tokens[2], line_no);
            }
            continue;
        }
        if (tokens.size() != 3) {
            throw ParseError("expected 'u v w', got " + std::to_string(tokens.size()) +
                             " fields", line_no);
        }
        RawEdge e;
        e.u = parse_id(tokens[0], line_no);
        e.v = parse_id(tokens[1], line_no);
        try {
            e.w = parse_double(tokens[2]);
        } catch (const ParseError& pe) {
            throw ParseError(pe.what() + std::string(" in weight field"), line_no);
        }
        raw.push_back(e);
    }
    return assemble(std::move(raw), min_n, 0, false);
}

LoadedGraph parse_dimacs(const std::string& text) {
    std::vector<RawEdge> raw;
    std::size_t declared_n = 0, declared_m = 0;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (tokens.size() != 4 || tokens[1] != "sp") {
                throw ParseError("expected 'p sp n m' header", line_no);
            }
            declared_n = parse_id(tokens[2], line_no);
            declared_m = parse_id(tokens[3], line_no);
            have_header = true;
            continue;
        }
        if (tokens[0] == "a") {
            if (!have_header) throw ParseError("arc before 'p sp' header", line_no);
            if (tokens.size() != 4) throw ParseError("expected 'a u v w'", line_no);
            RawEdge e;
            e.u = parse_id(tokens[1], line_no);
            e.v = parse_id(tokens[2], line_no);
            e.w = parse_double(tokens[3]);
            raw.push_back(e);
            continue;
        }
        throw ParseError("unknown DIMACS record '" + tokens[0] + "'", line_no);
    }
    if (!have_header) throw ParseError("missing 'p sp n m' header");
    (void)declared_m;  // arcs may collapse; the declared count is advisory
    return assemble(std::move(raw), 0, declared_n, true);
}

}  // namespace

LoadedGraph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_dimacs(text);
}

LoadedGraph load_graph(const std::string& path, GraphFormat format) {
    return parse_graph(read_file(path), format);
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::string out = "# n " + std::to_string(g.num_vertices()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += ' ';
        out += format_double(e.w);
        out += '\n';
    }
    return out;
}

void save_graph(const WeightedGraph& g, const std::string& path) {
    write_file(path, serialize_edge_list(g));
}

std::uint64_t fingerprint(const WeightedGraph& g) {
    return fnv1a(serialize_edge_list(g));
}

}  // namespace hopset
