#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cardmatch/types.hpp"

namespace cardmatch {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    NodeId source;
    NodeId target;
};

/// Immutable undirected multigraph with dense ids.
///
/// The adjacency list of every node enumerates its incident edges in global
/// edge order; a self-loop is listed twice. Greedy initialization and all
/// depth-first searches consume this order, so it is part of the contract.
class StaticGraph {
public:
    StaticGraph() = default;
    StaticGraph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    NodeId source(EdgeId e) const { return edge(e).source; }
    NodeId target(EdgeId e) const { return edge(e).target; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const EdgeId> adjacent(NodeId v) const {
        auto i = static_cast<std::size_t>(v);
        return {adj_.data() + adj_begin_[i], adj_.data() + adj_begin_[i + 1]};
    }

    // Edges whose stored source is v, in global order.
    std::span<const EdgeId> out_edges(NodeId v) const {
        auto i = static_cast<std::size_t>(v);
        return {out_.data() + out_begin_[i], out_.data() + out_begin_[i + 1]};
    }

    NodeId opposite(EdgeId e, NodeId v) const {
        const Edge& ed = edge(e);
        if (ed.source == v) return ed.target;
        if (ed.target == v) return ed.source;
        throw GraphError("opposite: node " + std::to_string(v) + " is not an endpoint of edge " +
                         std::to_string(e));
    }

private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adj_begin_{0};
    std::vector<EdgeId> adj_;
    std::vector<std::size_t> out_begin_{0};
    std::vector<EdgeId> out_;
};

StaticGraph build_graph(std::size_t node_count, std::vector<Edge> edges);

struct WorstCaseInstance {
    StaticGraph graph;
    NodeId hub;
};

// Complete graph on 2*floor(sqrt(m/2)) nodes plus n/8 chains of eight nodes
// hanging off the first node; mode 1 adds one chain of 2k nodes for every
// k in [5, sqrt(n)).
WorstCaseInstance generate_worst_case(std::size_t n, std::size_t m, int mode);

StaticGraph generate_random(std::size_t n, std::size_t m, std::uint64_t seed);

StaticGraph permute_representation(const StaticGraph& g, std::uint64_t seed);

StaticGraph read_edge_list(const std::string& path);
StaticGraph parse_edge_list(const std::string& text);
void write_edge_list(const StaticGraph& g, const std::string& path);
std::string format_edge_list(const StaticGraph& g);

}  // namespace cardmatch
