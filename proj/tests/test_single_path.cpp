#include <doctest.h>

#include <random>
#include <vector>

#include "cardmatch/single_path.hpp"
#include "cardmatch/verify.hpp"
#include "support.hpp"

using namespace cardmatch;
using namespace cardmatch::testing;

namespace {

struct Search {
    const StaticGraph& g;
    Matching m;
    AlternatingForest f;
    SplittablePartition blossoms;
    OpCounters counters;
    SinglePathSearch search;

    Search(const StaticGraph& graph, std::initializer_list<std::pair<int, int>> pairs)
        : g(graph), m(graph.node_count()), f(graph.node_count()), blossoms(graph.node_count()),
          search(g, m, f, blossoms, counters) {
        for (auto [u, v] : pairs) {
            m.pair(u, v);
            ++m.size;
        }
        search.set_checked(true);
        blossoms.set_checked(true);
    }

    NodeId from(NodeId root) {
        f.label[static_cast<std::size_t>(root)] = Label::Even;
        f.touched.assign(1, root);
        f.even_time[static_cast<std::size_t>(root)] = f.even_count++;
        return search.find_aug_path(root, root);
    }
};

}  // namespace

TEST_CASE("breakthrough on a path") {
    StaticGraph p4 = make(4, {{0, 1}, {1, 2}, {2, 3}});
    Search s(p4, {{1, 2}});
    CHECK(s.from(0) == 3);

    s.search.pending().clear();
    s.search.pending().emplace_back(2, 3);
    s.search.find_path(2, 0);
    for (auto [a, b] : s.search.pending()) s.m.pair(a, b);
    CHECK(size_of(s.m) == 2);

    s.search.pending().clear();
    s.search.find_path(0, 0);
    CHECK(s.search.pending().empty());
}

TEST_CASE("search through an odd cycle reaches the pendant") {
    StaticGraph g = c5_pendant();
    Search s(g, {{1, 2}, {3, 4}});
    CHECK(s.from(0) == 5);
}

TEST_CASE("isolated free node") {
    StaticGraph g = make(2, {});
    Search s(g, {});
    CHECK(s.from(0) == kNoNode);
}

TEST_CASE("finish_off") {
    StaticGraph g = k4();
    Search done(g, {{0, 1}, {2, 3}});
    CHECK(done.search.finish_off(true) == 0);
    CHECK(check_osc(g, matching_edges(g, done.m), odd_set_cover_from_labels(done.f.label, done.blossoms)));

    StaticGraph l = two_paths();
    Search empty(l, {});
    empty.search.finish_off(true);
    CHECK(size_of(empty.m) == 4);
}

TEST_CASE("single-path matchers on small examples") {
    for (bool greedy : {false, true}) {
        CHECK(kp_matcher(k4(), greedy).matching.size() == 2);
        CHECK(kp_matcher(petersen(), greedy).matching.size() == 5);
    }
    for (int heur : {0, 1}) {
        CHECK(queue_matcher_baseline(k4(), heur).matching.size() == 2);
        CHECK(queue_matcher_baseline(petersen(), heur).matching.size() == 5);
    }
}

TEST_CASE("single-path matchers against the oracle") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 14;
        StaticGraph g = generate_random(n, rng() % 30, rng());
        const auto best = oracle_max_matching(g);
        for (const auto& r : {kp_matcher(g, true), kp_matcher(g, false), queue_matcher_baseline(g, 0),
                              queue_matcher_baseline(g, 1)}) {
            REQUIRE(r.matching.size() == best);
            REQUIRE(check_matching(g, r.matching));
            std::string why;
            INFO(why);
            REQUIRE(check_osc(g, r.matching, r.osc, &why));
        }
    }
}
