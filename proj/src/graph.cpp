#include "cardmatch/graph.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace cardmatch {

StaticGraph::StaticGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (edges_.size() > static_cast<std::size_t>(INT32_MAX) ||
        node_count_ > static_cast<std::size_t>(INT32_MAX))
        throw GraphError("graph too large for 32-bit ids");
    std::vector<std::size_t> deg(node_count_ + 1, 0), out_deg(node_count_ + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.source < 0 || e.target < 0 || static_cast<std::size_t>(e.source) >= node_count_ ||
            static_cast<std::size_t>(e.target) >= node_count_)
            throw GraphError("edge " + std::to_string(i) + " has an endpoint out of range");
        ++deg[static_cast<std::size_t>(e.source) + 1];
        ++deg[static_cast<std::size_t>(e.target) + 1];
        ++out_deg[static_cast<std::size_t>(e.source) + 1];
    }
    std::partial_sum(deg.begin(), deg.end(), deg.begin());
    std::partial_sum(out_deg.begin(), out_deg.end(), out_deg.begin());
    adj_begin_ = deg;
    out_begin_ = out_deg;
    adj_.resize(2 * edges_.size());
    out_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        auto id = static_cast<EdgeId>(i);
        adj_[deg[static_cast<std::size_t>(e.source)]++] = id;
        adj_[deg[static_cast<std::size_t>(e.target)]++] = id;
        out_[out_deg[static_cast<std::size_t>(e.source)]++] = id;
    }
}

StaticGraph build_graph(std::size_t node_count, std::vector<Edge> edges) {
    return StaticGraph(node_count, std::move(edges));
}

namespace {

void append_chain(std::vector<Edge>& edges, std::size_t& next, std::size_t k, NodeId z) {
    auto a = [&](std::size_t i) { return static_cast<NodeId>(next + i); };
    edges.push_back({a(0), z});
    for (std::size_t i = 1; i + 1 < k; ++i) {
        edges.push_back({a(i), a(i + 1)});
        edges.push_back({a(i), z});
    }
    edges.push_back({a(0), a(1)});
    next += k;
}

// Uniform index in [0, bound) from a 64-bit engine; the modulo bias is
// below 2^-40 for every bound used here.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

WorstCaseInstance generate_worst_case(std::size_t n, std::size_t m, int mode) {
    if (n < 8 || m < 2) throw GraphError("generate_worst_case: need n >= 8 and m >= 2");
    const auto nc = 2 * static_cast<std::size_t>(std::sqrt(static_cast<double>(m) / 2.0));
    std::vector<Edge> edges;
    edges.reserve(nc * (nc - 1) / 2 + 2 * n + (mode == 1 ? 2 * n : 0));
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = i + 1; j < nc; ++j)
            edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    const NodeId z = 0;
    std::size_t next = nc;
    for (std::size_t i = 0; i < n / 8; ++i) append_chain(edges, next, 8, z);
    if (mode == 1) {
        const double root = std::sqrt(static_cast<double>(n));
        for (std::size_t k = 5; static_cast<double>(k) < root; ++k) append_chain(edges, next, 2 * k, z);
    }
    return {StaticGraph(next, std::move(edges)), z};
}

StaticGraph generate_random(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0) throw GraphError("generate_random: need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges(m);
    for (auto& e : edges) {
        e.source = static_cast<NodeId>(draw(rng, n));
        e.target = static_cast<NodeId>(draw(rng, n));
    }
    return StaticGraph(n, std::move(edges));
}

StaticGraph permute_representation(const StaticGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto shuffled = [&rng](std::size_t k) {
        std::vector<std::size_t> p(k);
        std::iota(p.begin(), p.end(), std::size_t{0});
        for (std::size_t i = k; i > 1; --i) std::swap(p[i - 1], p[draw(rng, i)]);
        return p;
    };
    const auto node_perm = shuffled(g.node_count());
    const auto edge_perm = shuffled(g.edge_count());
    std::vector<Edge> edges(g.edge_count());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& old = g.edge(static_cast<EdgeId>(edge_perm[i]));
        edges[i] = {static_cast<NodeId>(node_perm[static_cast<std::size_t>(old.source)]),
                    static_cast<NodeId>(node_perm[static_cast<std::size_t>(old.target)])};
    }
    return StaticGraph(g.node_count(), std::move(edges));
}

StaticGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&line_no](const std::string& what) -> ParseError {
        return ParseError(what + ", line " + std::to_string(line_no));
    };
    auto read_pair = [&](long long& a, long long& b) {
        if (!std::getline(in, line)) {
            ++line_no;
            throw fail("unexpected end of file");
        }
        ++line_no;
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) throw fail("malformed line");
    };
    long long n = 0, m = 0;
    read_pair(n, m);
    if (n < 0 || m < 0) throw fail("malformed header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        read_pair(u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) throw fail("endpoint out of range");
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw fail("trailing data");
    }
    return StaticGraph(static_cast<std::size_t>(n), std::move(edges));
}

StaticGraph read_edge_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string format_edge_list(const StaticGraph& g) {
    std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.source) + " " + std::to_string(e.target) + "\n";
    return out;
}

void write_edge_list(const StaticGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << format_edge_list(g);
    if (!out) throw ParseError("write failed: " + path);
}

}  // namespace cardmatch
