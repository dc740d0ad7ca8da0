#include "cardmatch/single_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace cardmatch {

SinglePathSearch::SinglePathSearch(const StaticGraph& g, Matching& matching, AlternatingForest& forest,
                                   SplittablePartition& blossoms, OpCounters& counters)
    : g_(g), matching_(matching), f_(forest), blossoms_(blossoms), counters_(counters) {}

// Breakthrough scan of v; pushes a frame when no free neighbor is found.
NodeId SinglePathSearch::enter(NodeId v) {
    for (EdgeId e : g_.adjacent(v)) {
        ++counters_.edge_scans;
        NodeId w = g_.opposite(e, v);
        if (w == v) continue;
        auto iw = static_cast<std::size_t>(w);
        if (matching_.is_free(w) && f_.label[iw] == Label::Unlabeled) {
            f_.parent[iw] = v;
            f_.touched.push_back(w);
            f_.label[iw] = Label::Odd;
            return w;
        }
    }
    std::size_t q = newly_even_.size();
    frames_.push_back({v, 0, q, q, q});
    return kNoNode;
}

NodeId SinglePathSearch::find_aug_path(NodeId v0, NodeId /*root*/) {
    frames_.clear();
    newly_even_.clear();
    NodeId found = enter(v0);
    while (found == kNoNode && !frames_.empty()) {
        Frame& fr = frames_.back();
        if (fr.queue_pos < fr.queue_end) {
            found = enter(newly_even_[fr.queue_pos++]);
            continue;
        }
        const NodeId v = fr.v;
        auto adj = g_.adjacent(v);
        if (fr.edge_pos == adj.size()) {
            newly_even_.resize(fr.queue_base);
            frames_.pop_back();
            continue;
        }
        EdgeId e = adj[fr.edge_pos++];
        ++counters_.edge_scans;
        NodeId w = g_.opposite(e, v);
        NodeId bw = blossoms_.find(w);
        if (f_.label[static_cast<std::size_t>(bw)] == Label::Odd || w == v) continue;
        if (f_.label[static_cast<std::size_t>(bw)] == Label::Unlabeled) {
            auto iw = static_cast<std::size_t>(w);
            f_.label[iw] = Label::Odd;
            f_.parent[iw] = v;
            f_.touched.push_back(w);
            NodeId mw = matching_.mate_of(w);
            auto imw = static_cast<std::size_t>(mw);
            f_.label[imw] = Label::Even;
            f_.touched.push_back(mw);
            f_.even_time[imw] = f_.even_count++;
            found = enter(mw);
            continue;
        }
        NodeId bv = blossoms_.find(v);
        if (f_.even_time[static_cast<std::size_t>(bv)] >= f_.even_time[static_cast<std::size_t>(bw)]) continue;
        // Forward edge: walk down from bw to bv; odd nodes collected so that
        // the one closest to bv is explored first.
        newly_even_.resize(fr.queue_base);
        const std::size_t first = newly_even_.size();
        while (bw != bv) {
            NodeId mbw = matching_.mate_of(bw);
            if (checked_ && mbw == kNoNode)
                throw std::logic_error("find_aug_path: blossom walk passed the tree root");
            blossoms_.union_blocks(bw, mbw);
            NodeId next = blossoms_.find(f_.parent[static_cast<std::size_t>(mbw)]);
            if (checked_ && f_.even_time[static_cast<std::size_t>(next)] >=
                                f_.even_time[static_cast<std::size_t>(bw)])
                throw std::logic_error("find_aug_path: blossom walk is not descending");
            bw = next;
            blossoms_.union_blocks(mbw, bw);
            newly_even_.push_back(mbw);
            f_.source_bridge[static_cast<std::size_t>(mbw)] = w;
            f_.target_bridge[static_cast<std::size_t>(mbw)] = v;
        }
        blossoms_.make_rep(bv);
        std::reverse(newly_even_.begin() + static_cast<std::ptrdiff_t>(first), newly_even_.end());
        Frame& top = frames_.back();
        top.queue_pos = first;
        top.queue_end = newly_even_.size();
    }
    frames_.clear();
    newly_even_.clear();
    return found;
}

void SinglePathSearch::find_path(NodeId x, NodeId y) {
    trace_even_path(f_, matching_.mate, x, y, pending_, scratch_);
}

std::size_t SinglePathSearch::finish_off(bool reset) {
    const std::size_t n = g_.node_count();
    if (reset) {
        std::vector<NodeId> all(n);
        for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<NodeId>(v);
        blossoms_.split(all);
        std::fill(f_.label.begin(), f_.label.end(), Label::Unlabeled);
    }
    std::size_t augmented = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto v0 = static_cast<NodeId>(i);
        if (!matching_.is_free(v0)) continue;
        f_.label[i] = Label::Even;
        f_.touched.clear();
        f_.touched.push_back(v0);
        f_.even_time[i] = f_.even_count++;
        NodeId w = find_aug_path(v0, v0);
        if (w == kNoNode) continue;
        NodeId pw = f_.parent[static_cast<std::size_t>(w)];
        pending_.clear();
        pending_.emplace_back(pw, w);
        find_path(pw, v0);
        for (auto [a, b] : pending_) matching_.pair(a, b);
        pending_.clear();
        for (NodeId v : f_.touched) f_.label[static_cast<std::size_t>(v)] = Label::Unlabeled;
        blossoms_.split(f_.touched);
        ++matching_.size;
        ++augmented;
    }
    return augmented;
}

SinglePathResult kp_matcher(const StaticGraph& g, bool greedy) {
    const std::size_t n = g.node_count();
    Matching matching(n);
    AlternatingForest forest(n);
    SplittablePartition base(n);
    SinglePathResult result;
    if (greedy) greedy_extend(g, matching);
    SinglePathSearch search(g, matching, forest, base, result.counters);
    search.finish_off(false);
    result.matching = matching_edges(g, matching);
    result.osc = odd_set_cover_from_labels(forest.label, base);
    result.counters.unions = base.union_count();
    return result;
}

SinglePathResult queue_matcher_baseline(const StaticGraph& g, int heur) {
    const std::size_t n = g.node_count();
    Matching matching(n);
    AlternatingForest f(n);
    SplittablePartition base(n);
    SinglePathResult result;
    OpCounters& counters = result.counters;
    std::fill(f.label.begin(), f.label.end(), Label::Even);
    auto& label = f.label;
    auto& pred = f.parent;
    auto& mate = matching.mate;
    auto at = [](NodeId v) { return static_cast<std::size_t>(v); };
    if (heur == 1) {
        for (const Edge& e : g.edges())
            if (e.source != e.target && matching.is_free(e.source) && matching.is_free(e.target)) {
                matching.pair(e.source, e.target);
                label[at(e.source)] = label[at(e.target)] = Label::Unlabeled;
                ++matching.size;
            }
    }

    std::uint64_t stamp = 0;
    std::vector<std::uint64_t> path1(n, 0), path2(n, 0);
    std::vector<NodeId> queue;
    std::vector<NodePair> pairs, scratch;
    auto shrink_path = [&](NodeId b, NodeId v, NodeId w) {
        NodeId x = base.find(v);
        while (x != b) {
            base.union_blocks(x, b);
            x = mate[at(x)];
            base.union_blocks(x, b);
            base.make_rep(b);
            queue.push_back(x);
            ++counters.queue_ops;
            f.source_bridge[at(x)] = v;
            f.target_bridge[at(x)] = w;
            x = base.find(pred[at(x)]);
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        const auto root = static_cast<NodeId>(i);
        if (!matching.is_free(root)) continue;
        queue.assign(1, root);
        ++counters.queue_ops;
        std::size_t head = 0;
        f.touched.assign(1, root);
        bool breakthrough = false;
        while (!breakthrough && head < queue.size()) {
            const NodeId v = queue[head++];
            ++counters.queue_ops;
            for (EdgeId e : g.adjacent(v)) {
                ++counters.edge_scans;
                const NodeId w = g.opposite(e, v);
                if (base.find(v) == base.find(w) || label[at(base.find(w))] == Label::Odd) continue;
                if (label[at(w)] == Label::Unlabeled) {
                    label[at(w)] = Label::Odd;
                    f.touched.push_back(w);
                    pred[at(w)] = v;
                    label[at(mate[at(w)])] = Label::Even;
                    f.touched.push_back(mate[at(w)]);
                    queue.push_back(mate[at(w)]);
                    ++counters.queue_ops;
                    continue;
                }
                NodeId hv = base.find(v), hw = base.find(w);
                ++stamp;
                path1[at(hv)] = path2[at(hw)] = stamp;
                while (path1[at(hw)] != stamp && path2[at(hv)] != stamp &&
                       (mate[at(hv)] != kNoNode || mate[at(hw)] != kNoNode)) {
                    if (mate[at(hv)] != kNoNode) {
                        hv = base.find(pred[at(mate[at(hv)])]);
                        path1[at(hv)] = stamp;
                    }
                    if (mate[at(hw)] != kNoNode) {
                        hw = base.find(pred[at(mate[at(hw)])]);
                        path2[at(hw)] = stamp;
                    }
                }
                if (path1[at(hw)] == stamp || path2[at(hv)] == stamp) {
                    NodeId b = path1[at(hw)] == stamp ? hw : hv;
                    shrink_path(b, v, w);
                    shrink_path(b, w, v);
                    continue;
                }
                pairs.assign(1, {w, v});
                trace_even_path(f, mate, v, hv, pairs, scratch);
                for (auto [a, c] : pairs) matching.pair(a, c);
                ++matching.size;
                f.touched.push_back(w);
                for (NodeId t : f.touched) label[at(t)] = Label::Unlabeled;
                base.split(f.touched);
                breakthrough = true;
                break;
            }
        }
    }
    result.matching = matching_edges(g, matching);
    result.osc = odd_set_cover_from_labels(label, base);
    result.counters.unions = base.union_count();
    return result;
}

}  // namespace cardmatch
