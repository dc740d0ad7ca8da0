#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cardmatch/graph.hpp"
#include "cardmatch/partition.hpp"
#include "cardmatch/types.hpp"

namespace cardmatch {

struct Matching {
    std::vector<NodeId> mate;
    std::size_t size = 0;

    Matching() = default;
    explicit Matching(std::size_t n) : mate(n, kNoNode) {}

    bool is_free(NodeId v) const { return mate[static_cast<std::size_t>(v)] == kNoNode; }
    NodeId mate_of(NodeId v) const { return mate[static_cast<std::size_t>(v)]; }
    void pair(NodeId u, NodeId v) {
        mate[static_cast<std::size_t>(u)] = v;
        mate[static_cast<std::size_t>(v)] = u;
    }
};

// Per-node cover labels; -1 marks an unassigned node.
using OddSetCover = std::vector<int>;

using NodePair = std::pair<NodeId, NodeId>;

// Scans edges in global order and mates both endpoints when free.
std::size_t greedy_extend(const StaticGraph& g, Matching& m);

// One edge per mated pair, the first in global order among parallels.
std::vector<EdgeId> matching_edges(const StaticGraph& g, const Matching& m);

// Unlabeled nodes: one gets 1, the rest 0 (exactly two of them) or 2.
// Nontrivial blocks of `blossoms` get fresh labels; trivial even nodes 0,
// trivial odd nodes 1.
OddSetCover odd_set_cover_from_labels(std::span<const Label> label, SplittablePartition& blossoms);

// Search forest shared by the single-path engines and by phase one.
struct AlternatingForest {
    std::vector<Label> label;
    std::vector<NodeId> parent;
    std::vector<NodeId> source_bridge;
    std::vector<NodeId> target_bridge;
    std::vector<std::int64_t> even_time;
    std::int64_t even_count = 0;
    std::vector<NodeId> touched;

    explicit AlternatingForest(std::size_t n = 0)
        : label(n, Label::Unlabeled),
          parent(n, kNoNode),
          source_bridge(n, kNoNode),
          target_bridge(n, kNoNode),
          even_time(n, 0) {}
};

// Emits the non-matching edges of the even alternating path from x down to
// y. Even nodes step through mate and parent, nodes that became even inside
// a blossom step through their bridge. Iterative; `stack` is scratch.
void trace_even_path(const AlternatingForest& f, const std::vector<NodeId>& mate, NodeId x, NodeId y,
                     std::vector<NodePair>& out, std::vector<NodePair>& stack);

}  // namespace cardmatch
