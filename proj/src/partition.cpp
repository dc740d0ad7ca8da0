#include "cardmatch/partition.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cardmatch {

SplittablePartition::SplittablePartition(std::size_t n)
    : parent_(n), rep_(n), size_(n, 1), rank_(n, 0), blocks_(n) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
    std::iota(rep_.begin(), rep_.end(), NodeId{0});
}

NodeId SplittablePartition::root(NodeId v) {
    ++ops_;
    NodeId r = v;
    while (parent_[static_cast<std::size_t>(r)] != r) {
        r = parent_[static_cast<std::size_t>(r)];
        ++chases_;
    }
    while (parent_[static_cast<std::size_t>(v)] != r) {
        NodeId next = parent_[static_cast<std::size_t>(v)];
        parent_[static_cast<std::size_t>(v)] = r;
        v = next;
    }
    return r;
}

NodeId SplittablePartition::find(NodeId v) { return rep_[static_cast<std::size_t>(root(v))]; }

void SplittablePartition::union_blocks(NodeId u, NodeId v) {
    NodeId a = root(u), b = root(v);
    if (a == b) return;
    auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
    if (rank_[ia] < rank_[ib]) std::swap(ia, ib);
    parent_[ib] = static_cast<NodeId>(ia);
    size_[ia] += size_[ib];
    if (rank_[ia] == rank_[ib]) ++rank_[ia];
    --blocks_;
    ++unions_;
}

void SplittablePartition::make_rep(NodeId v) { rep_[static_cast<std::size_t>(root(v))] = v; }

void SplittablePartition::split(std::span<const NodeId> nodes) {
    if (checked_) {
        std::unordered_map<NodeId, std::uint32_t> listed_per_root;
        for (NodeId v : nodes) ++listed_per_root[root(v)];
        for (auto [r, cnt] : listed_per_root)
            if (cnt != size_[static_cast<std::size_t>(r)])
                throw std::logic_error("split: node set is not a union of whole blocks");
    }
    for (NodeId v : nodes) {
        auto i = static_cast<std::size_t>(v);
        if (parent_[i] == v && size_[i] > 1) blocks_ += size_[i] - 1;
        parent_[i] = v;
        rep_[i] = v;
        size_[i] = 1;
        rank_[i] = 0;
    }
}

}  // namespace cardmatch
