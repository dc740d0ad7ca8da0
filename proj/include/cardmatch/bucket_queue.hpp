#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cardmatch/types.hpp"

namespace cardmatch {

// Monotone edge queue with integer keys in [0, n/2]. Keys at or beyond the
// bucket range are dropped: no such edge can lie on a shortest augmenting
// path. Buckets are FIFO and share one pooled singly linked list.
class BucketQueue {
public:
    explicit BucketQueue(std::size_t node_count = 0);

    void reset();
    void insert(EdgeId e, std::int64_t key);
    std::optional<EdgeId> delete_at_delta(std::int64_t delta);

    std::size_t bucket_count() const { return head_.size(); }
    std::int64_t high_water() const { return high_water_; }
    std::uint64_t operations() const { return ops_; }

private:
    struct Cell {
        EdgeId edge;
        std::int32_t next;
    };
    std::vector<std::int32_t> head_;
    std::vector<std::int32_t> tail_;
    std::vector<Cell> pool_;
    std::int64_t high_water_ = 0;
    std::uint64_t ops_ = 0;
};

}  // namespace cardmatch
