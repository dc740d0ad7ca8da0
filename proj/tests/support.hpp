#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cardmatch/graph.hpp"
#include "cardmatch/matching.hpp"

namespace cardmatch::testing {

inline StaticGraph make(std::size_t n, std::initializer_list<std::pair<int, int>> es) {
    std::vector<Edge> edges;
    for (auto [u, v] : es) edges.push_back({u, v});
    return build_graph(n, std::move(edges));
}

inline EdgeId edge_between(const StaticGraph& g, NodeId u, NodeId v) {
    for (EdgeId e : g.adjacent(u))
        if (g.opposite(e, u) == v) return e;
    throw std::logic_error("no such edge");
}

inline std::vector<EdgeId> edges_of(const StaticGraph& g, std::initializer_list<std::pair<int, int>> ps) {
    std::vector<EdgeId> out;
    for (auto [u, v] : ps) out.push_back(edge_between(g, u, v));
    return out;
}

// Two disjoint paths of length three; their middle edges start matched.
inline StaticGraph two_paths() { return make(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}}); }

inline StaticGraph c5() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

inline StaticGraph c5_pendant() { return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}}); }

inline StaticGraph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline StaticGraph petersen() {
    return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                     {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline std::size_t size_of(const Matching& m) {
    std::size_t k = 0;
    for (std::size_t v = 0; v < m.mate.size(); ++v)
        if (m.mate[v] != kNoNode && static_cast<std::size_t>(m.mate[v]) > v) ++k;
    return k;
}

}  // namespace cardmatch::testing
