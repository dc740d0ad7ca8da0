#include "cardmatch/bucket_queue.hpp"

#include <algorithm>

namespace cardmatch {

BucketQueue::BucketQueue(std::size_t node_count)
    : head_(node_count / 2 + 1, -1), tail_(node_count / 2 + 1, -1) {}

void BucketQueue::reset() {
    std::fill(head_.begin(), head_.end(), -1);
    std::fill(tail_.begin(), tail_.end(), -1);
    pool_.clear();
    high_water_ = 0;
}

void BucketQueue::insert(EdgeId e, std::int64_t key) {
    if (key < 0 || key >= static_cast<std::int64_t>(head_.size())) return;
    ++ops_;
    auto k = static_cast<std::size_t>(key);
    auto cell = static_cast<std::int32_t>(pool_.size());
    pool_.push_back({e, -1});
    if (tail_[k] < 0)
        head_[k] = cell;
    else
        pool_[static_cast<std::size_t>(tail_[k])].next = cell;
    tail_[k] = cell;
}

std::optional<EdgeId> BucketQueue::delete_at_delta(std::int64_t delta) {
    high_water_ = std::max(high_water_, delta);
    if (delta < 0 || delta >= static_cast<std::int64_t>(head_.size())) return std::nullopt;
    auto k = static_cast<std::size_t>(delta);
    if (head_[k] < 0) return std::nullopt;
    ++ops_;
    const Cell& c = pool_[static_cast<std::size_t>(head_[k])];
    head_[k] = c.next;
    if (head_[k] < 0) tail_[k] = -1;
    return c.edge;
}

}  // namespace cardmatch
