#pragma once

#include <cstddef>
#include <vector>

#include "cardmatch/graph.hpp"
#include "cardmatch/matching.hpp"
#include "cardmatch/partition.hpp"
#include "cardmatch/types.hpp"

namespace cardmatch {

/// Depth-first Edmonds search with the two Kececioglu-Pecqueur heuristics:
/// an immediate breakthrough scan before growing, and blossom shrinking on
/// forward edges only. Serves both as a standalone matcher and as the
/// finisher of the scaling algorithm, which lends it its own arrays.
class SinglePathSearch {
public:
    SinglePathSearch(const StaticGraph& g, Matching& matching, AlternatingForest& forest,
                     SplittablePartition& blossoms, OpCounters& counters);

    // Returns the free end of an augmenting path from the tree rooted at
    // `root`, or kNoNode. `v` must be even in that tree.
    NodeId find_aug_path(NodeId v, NodeId root);

    // Appends to pending() the non-matching edges of the even path from x to y.
    void find_path(NodeId x, NodeId y);

    // One search per free node. With `reset`, labels and blossoms are
    // cleared for every node first. Returns the number of augmentations.
    std::size_t finish_off(bool reset);

    std::vector<NodePair>& pending() { return pending_; }

    // Reports a blossom whose walk from the far base does not descend to
    // the near base (std::logic_error).
    void set_checked(bool on) { checked_ = on; }

private:
    struct Frame {
        NodeId v;
        std::size_t edge_pos;
        std::size_t queue_base;
        std::size_t queue_pos;
        std::size_t queue_end;
    };

    NodeId enter(NodeId v);

    const StaticGraph& g_;
    Matching& matching_;
    AlternatingForest& f_;
    SplittablePartition& blossoms_;
    OpCounters& counters_;
    bool checked_ = false;
    std::vector<Frame> frames_;
    std::vector<NodeId> newly_even_;
    std::vector<NodePair> pending_;
    std::vector<NodePair> scratch_;
};

struct SinglePathResult {
    std::vector<EdgeId> matching;
    OddSetCover osc;
    OpCounters counters;
};

// Standalone depth-first matcher; greedy initialization when `greedy`.
SinglePathResult kp_matcher(const StaticGraph& g, bool greedy = true);

// Breadth-first Edmonds with lock-step blossom detection; greedy
// initialization when heur = 1.
SinglePathResult queue_matcher_baseline(const StaticGraph& g, int heur = 1);

}  // namespace cardmatch
