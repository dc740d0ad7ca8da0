#include "cardmatch/verify.hpp"

#include <bit>
#include <algorithm>
#include <cstdint>
#include <functional>

namespace cardmatch {

namespace {

bool fail(std::string* reason, const char* text) {
    if (reason) *reason = text;
    return false;
}

}  // namespace

bool check_matching(const StaticGraph& g, std::span<const EdgeId> m, std::string* reason) {
    std::vector<char> covered(g.node_count(), 0);
    for (EdgeId e : m) {
        if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) return fail(reason, "edge not in graph");
        const Edge& ed = g.edge(e);
        if (ed.source == ed.target) return fail(reason, "self-loop in matching");
        auto s = static_cast<std::size_t>(ed.source), t = static_cast<std::size_t>(ed.target);
        if (covered[s] || covered[t]) return fail(reason, "two matching edges share a node");
        covered[s] = covered[t] = 1;
    }
    return true;
}

bool check_osc(const StaticGraph& g, std::span<const EdgeId> m, const OddSetCover& osc, std::string* reason) {
    const std::size_t n = g.node_count();
    if (osc.size() != n) return fail(reason, "OSC has wrong length");
    const long long bound = static_cast<long long>(std::max<std::size_t>(2, n));
    std::vector<std::size_t> count(static_cast<std::size_t>(bound), 0);
    for (int label : osc) {
        if (label < 0 || label >= bound) return fail(reason, "negative label or label larger than n - 1");
        ++count[static_cast<std::size_t>(label)];
    }
    std::size_t s = count[1];
    for (std::size_t i = 2; i < count.size(); ++i) s += count[i] / 2;
    if (s != m.size()) return fail(reason, "OSC does not prove optimality");
    for (const Edge& e : g.edges()) {
        if (e.source == e.target) continue;
        int a = osc[static_cast<std::size_t>(e.source)], b = osc[static_cast<std::size_t>(e.target)];
        if (a == 1 || b == 1) continue;
        if (a == b && a >= 2) continue;
        return fail(reason, "OSC is not a cover");
    }
    return true;
}

std::size_t oracle_max_matching(const StaticGraph& g) {
    const std::size_t n = g.node_count();
    if (n > 20) throw OracleLimitError("oracle_max_matching: more than 20 nodes");
    std::vector<std::uint32_t> nbr(n, 0);
    for (const Edge& e : g.edges())
        if (e.source != e.target) {
            nbr[static_cast<std::size_t>(e.source)] |= 1u << e.target;
            nbr[static_cast<std::size_t>(e.target)] |= 1u << e.source;
        }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
    std::function<int(std::uint32_t)> best = [&](std::uint32_t covered) -> int {
        if (covered == full) return 0;
        std::int8_t& slot = memo[covered];
        if (slot >= 0) return slot;
        int i = std::countr_one(covered);
        std::uint32_t with_i = covered | (1u << i);
        int result = best(with_i);
        for (std::uint32_t free_nbrs = nbr[static_cast<std::size_t>(i)] & ~with_i; free_nbrs;
             free_nbrs &= free_nbrs - 1) {
            int j = std::countr_zero(free_nbrs);
            result = std::max(result, 1 + best(with_i | (1u << j)));
        }
        slot = static_cast<std::int8_t>(result);
        return result;
    };
    return static_cast<std::size_t>(best(0));
}

std::size_t oracle_max_matching_by_subsets(const StaticGraph& g) {
    const std::size_t n = g.node_count(), m = g.edge_count();
    if (n > 10 || m > 15) throw OracleLimitError("oracle_max_matching_by_subsets: needs n <= 10 and m <= 15");
    std::size_t best = 0;
    for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        std::uint32_t used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!(subset >> i & 1u)) continue;
            const Edge& e = g.edge(static_cast<EdgeId>(i));
            std::uint32_t ends = (1u << e.source) | (1u << e.target);
            if (e.source == e.target || (used & ends)) ok = false;
            used |= ends;
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(subset)));
    }
    return best;
}

std::optional<std::size_t> oracle_sap_length_mates(const StaticGraph& g, const std::vector<NodeId>& mate) {
    const std::size_t n = g.node_count();
    if (n > 12) throw OracleLimitError("oracle_sap_length: more than 12 nodes");
    std::optional<std::size_t> best;
    std::vector<char> on_path(n, 0);
    // At an even position: leave via a non-matching edge; the length counts edges so far.
    std::function<void(NodeId, std::size_t)> extend = [&](NodeId v, std::size_t len) {
        if (best && len + 1 >= *best) return;
        for (EdgeId e : g.adjacent(v)) {
            NodeId u = g.opposite(e, v);
            auto iu = static_cast<std::size_t>(u);
            if (u == v || on_path[iu] || mate[static_cast<std::size_t>(v)] == u) continue;
            if (mate[iu] == kNoNode) {
                best = len + 1;
                return;
            }
            NodeId w = mate[iu];
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[iu] = on_path[static_cast<std::size_t>(w)] = 1;
            extend(w, len + 2);
            on_path[iu] = on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (std::size_t f = 0; f < n; ++f) {
        if (mate[f] != kNoNode) continue;
        on_path[f] = 1;
        extend(static_cast<NodeId>(f), 0);
        on_path[f] = 0;
    }
    return best;
}

std::optional<std::size_t> oracle_sap_length(const StaticGraph& g, std::span<const EdgeId> m) {
    std::vector<NodeId> mate(g.node_count(), kNoNode);
    for (EdgeId e : m) {
        const Edge& ed = g.edge(e);
        mate[static_cast<std::size_t>(ed.source)] = ed.target;
        mate[static_cast<std::size_t>(ed.target)] = ed.source;
    }
    return oracle_sap_length_mates(g, mate);
}

}  // namespace cardmatch
