#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "cardmatch/graph.hpp"
#include "cardmatch/matching.hpp"

namespace cardmatch {

bool check_matching(const StaticGraph& g, std::span<const EdgeId> m, std::string* reason = nullptr);

// True iff every label lies in [0, max(2, n)), |M| = n1 + sum_{i>=2} floor(ni/2)
// and every non-loop edge has an endpoint labeled 1 or two equal labels >= 2.
bool check_osc(const StaticGraph& g, std::span<const EdgeId> m, const OddSetCover& osc,
               std::string* reason = nullptr);

class OracleLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact maximum matching size; n <= 20. Branches on the lowest uncovered node
// and memoizes on the covered-set bitmask.
std::size_t oracle_max_matching(const StaticGraph& g);

// Independent check of the above by enumerating edge subsets; n <= 10, m <= 15.
std::size_t oracle_max_matching_by_subsets(const StaticGraph& g);

// Length of a shortest augmenting path relative to `mate`, by exhaustive
// search over alternating simple paths; n <= 12. The first form takes the
// mate array, the second the matched edges.
std::optional<std::size_t> oracle_sap_length_mates(const StaticGraph& g, const std::vector<NodeId>& mate);
std::optional<std::size_t> oracle_sap_length(const StaticGraph& g, std::span<const EdgeId> m);

}  // namespace cardmatch
