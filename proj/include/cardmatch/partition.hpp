#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cardmatch/types.hpp"

namespace cardmatch {

// Union-find with an explicit representative per root, so make_rep is O(1)
// and split resets only the listed nodes.
class SplittablePartition {
public:
    explicit SplittablePartition(std::size_t n = 0);

    NodeId find(NodeId v);
    bool same_block(NodeId u, NodeId v) { return root(u) == root(v); }
    void union_blocks(NodeId u, NodeId v);
    void make_rep(NodeId v);

    // The listed nodes must form a union of whole blocks. With checking
    // enabled a violation throws std::logic_error.
    void split(std::span<const NodeId> nodes);

    std::size_t size() const { return parent_.size(); }
    std::size_t block_count() const { return blocks_; }

    void set_checked(bool on) { checked_ = on; }
    std::uint64_t union_count() const { return unions_; }
    std::uint64_t pointer_chases() const { return chases_; }
    std::uint64_t operation_count() const { return ops_; }

private:
    NodeId root(NodeId v);

    std::vector<NodeId> parent_;
    std::vector<NodeId> rep_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint8_t> rank_;
    std::size_t blocks_;
    bool checked_ = false;
    std::uint64_t unions_ = 0;
    std::uint64_t chases_ = 0;
    std::uint64_t ops_ = 0;
};

}  // namespace cardmatch
