#include "cardmatch/matching.hpp"

namespace cardmatch {

std::size_t greedy_extend(const StaticGraph& g, Matching& m) {
    for (const Edge& e : g.edges()) {
        if (e.source != e.target && m.is_free(e.source) && m.is_free(e.target)) {
            m.pair(e.source, e.target);
            ++m.size;
        }
    }
    return m.size;
}

std::vector<EdgeId> matching_edges(const StaticGraph& g, const Matching& m) {
    std::vector<NodeId> mate = m.mate;
    std::vector<EdgeId> out;
    out.reserve(m.size);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(static_cast<EdgeId>(i));
        if (e.source != e.target && mate[static_cast<std::size_t>(e.source)] == e.target) {
            out.push_back(static_cast<EdgeId>(i));
            mate[static_cast<std::size_t>(e.source)] = kNoNode;
            mate[static_cast<std::size_t>(e.target)] = kNoNode;
        }
    }
    return out;
}

OddSetCover odd_set_cover_from_labels(std::span<const Label> label, SplittablePartition& blossoms) {
    const std::size_t n = label.size();
    OddSetCover osc(n, -1);
    std::size_t unlabeled = 0;
    NodeId arb = kNoNode;
    for (std::size_t v = 0; v < n; ++v)
        if (label[v] == Label::Unlabeled) {
            ++unlabeled;
            arb = static_cast<NodeId>(v);
        }
    int fill = unlabeled > 2 ? 2 : 0;
    if (unlabeled > 0) {
        for (std::size_t v = 0; v < n; ++v)
            if (label[v] == Label::Unlabeled) osc[v] = fill;
        osc[static_cast<std::size_t>(arb)] = 1;
    }
    int next = fill == 0 ? 2 : 3;
    for (std::size_t v = 0; v < n; ++v) {
        auto b = static_cast<std::size_t>(blossoms.find(static_cast<NodeId>(v)));
        if (b != v && osc[b] == -1) osc[b] = next++;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto b = static_cast<std::size_t>(blossoms.find(static_cast<NodeId>(v)));
        if (b == v) {
            if (osc[v] == -1) osc[v] = label[v] == Label::Even ? 0 : 1;
        } else {
            osc[v] = osc[b];
        }
    }
    return osc;
}

void trace_even_path(const AlternatingForest& f, const std::vector<NodeId>& mate, NodeId x, NodeId y,
                     std::vector<NodePair>& out, std::vector<NodePair>& stack) {
    stack.clear();
    stack.emplace_back(x, y);
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        while (a != b) {
            auto ia = static_cast<std::size_t>(a);
            if (f.label[ia] == Label::Even) {
                NodeId ma = mate[ia];
                NodeId pa = f.parent[static_cast<std::size_t>(ma)];
                out.emplace_back(ma, pa);
                a = pa;
            } else {
                NodeId sb = f.source_bridge[ia], tb = f.target_bridge[ia];
                out.emplace_back(sb, tb);
                stack.emplace_back(sb, mate[ia]);
                a = tb;
            }
        }
    }
}

}  // namespace cardmatch
