#pragma once

#include <cstdint>

namespace cardmatch {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr EdgeId kNoEdge = -1;

enum class Label : std::uint8_t { Even, Odd, Unlabeled };

// Portable work counters. edge_scans counts every visit of an adjacency
// entry, unions counts merging unions, queue_ops counts bucket inserts
// and successful pops (queue pushes and pops in the breadth-first
// baseline; zero in the depth-first one).
struct OpCounters {
    std::uint64_t edge_scans = 0;
    std::uint64_t unions = 0;
    std::uint64_t queue_ops = 0;

    OpCounters& operator+=(const OpCounters& o) {
        edge_scans += o.edge_scans;
        unions += o.unions;
        queue_ops += o.queue_ops;
        return *this;
    }
};

}  // namespace cardmatch
