#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "cardmatch/bucket_queue.hpp"
#include "cardmatch/partition.hpp"

using namespace cardmatch;

TEST_CASE("partition basics") {
    SplittablePartition p(8);
    CHECK(p.find(3) == 3);
    p.union_blocks(1, 2);
    p.make_rep(2);
    CHECK(p.find(1) == 2);
    const auto blocks = p.block_count();
    p.union_blocks(0, 0);
    CHECK(p.block_count() == blocks);
    p.union_blocks(0, 1);
    CHECK(p.same_block(0, 1));
    p.make_rep(1);
    CHECK(p.find(0) == 1);
    CHECK(p.find(2) == 1);
    p.make_rep(5);
    CHECK(p.find(5) == 5);
}

TEST_CASE("partition split") {
    SplittablePartition p(6);
    p.set_checked(true);
    p.union_blocks(0, 1);
    p.union_blocks(2, 3);
    p.union_blocks(3, 4);
    p.split(std::vector<NodeId>{});
    CHECK(p.same_block(2, 4));
    p.split(std::vector<NodeId>{0, 1});
    CHECK_FALSE(p.same_block(0, 1));
    CHECK_THROWS_AS(p.split(std::vector<NodeId>{2, 3}), std::logic_error);
    p.split(std::vector<NodeId>{0, 1, 2, 3, 4, 5});
    CHECK(p.block_count() == 6);
    for (NodeId v = 0; v < 6; ++v) CHECK(p.find(v) == v);
}

TEST_CASE("partition agrees with a naive model") {
    const int n = 40;
    std::mt19937 rng(9);
    SplittablePartition p(n);
    std::vector<int> block(n);
    for (int v = 0; v < n; ++v) block[v] = v;
    auto members = [&](int b) {
        std::vector<NodeId> out;
        for (int x = 0; x < n; ++x)
            if (block[x] == b) out.push_back(x);
        return out;
    };
    int fresh = n;
    for (int step = 0; step < 20000; ++step) {
        const int op = static_cast<int>(rng() % 10);
        const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (op < 5) {
            p.union_blocks(u, v);
            const int from = block[v];
            for (int x = 0; x < n; ++x)
                if (block[x] == from) block[x] = block[u];
        } else if (op < 7) {
            p.make_rep(u);
            for (NodeId x : members(block[u])) REQUIRE(p.find(x) == u);
        } else if (op < 8) {
            const auto nodes = members(block[u]);
            p.split(nodes);
            for (NodeId x : nodes) block[x] = fresh++;
        } else {
            REQUIRE(p.same_block(u, v) == (block[u] == block[v]));
            const NodeId r = p.find(u);
            REQUIRE(block[r] == block[u]);
            for (NodeId x : members(block[u])) REQUIRE(p.find(x) == r);
        }
    }
}

TEST_CASE("path compression keeps pointer chases near linear") {
    const int n = 1 << 14;
    SplittablePartition p(n);
    std::mt19937 rng(1);
    for (int i = 0; i < 4 * n; ++i) {
        p.union_blocks(static_cast<NodeId>(rng() % n), static_cast<NodeId>(rng() % n));
        p.find(static_cast<NodeId>(rng() % n));
    }
    CHECK(static_cast<double>(p.pointer_chases()) <= 5.0 * static_cast<double>(p.operation_count()));
}

TEST_CASE("bucket queue") {
    BucketQueue q(10);
    CHECK(q.bucket_count() == 6);
    q.reset();
    q.insert(7, 3);
    q.reset();
    CHECK_FALSE(q.delete_at_delta(3).has_value());

    q.insert(1, 6);
    CHECK_FALSE(q.delete_at_delta(6).has_value());
    q.insert(2, 0);
    CHECK(q.delete_at_delta(0) == 2);
    CHECK_FALSE(q.delete_at_delta(0).has_value());
    CHECK_FALSE(q.delete_at_delta(4).has_value());
    CHECK_FALSE(q.delete_at_delta(9).has_value());

    q.insert(3, 3);
    q.insert(4, 3);
    CHECK(q.delete_at_delta(3) == 3);
    CHECK(q.delete_at_delta(3) == 4);
    CHECK_FALSE(q.delete_at_delta(3).has_value());
    q.insert(5, -1);
    CHECK(q.high_water() >= 3);
}
