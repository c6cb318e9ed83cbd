#pragma once

#include "crithg/config.hpp"
#include "crithg/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace crithg {

struct GreedyRound {
    Edge edge;
    std::uint64_t gain = 0;               // subsets newly covered this round
    std::uint64_t uncovered_remaining = 0; // after taking the edge
};

struct GreedyCoverResult {
    Hypergraph hypergraph;
    std::vector<GreedyRound> rounds;
};

// Build an r-uniform hypergraph on n vertices in which every (n-r+1)-subset
// contains an edge (equivalently tau >= r), by repeatedly taking the edge
// contained in the most subsets still missing one. Ties break to the
// lexicographically smallest edge; the resulting sequence is deterministic.
// Bookkeeping is a bitmap over the C(n, r-1) complements of the subsets.
GreedyCoverResult greedy_covering(int n, int r, std::uint64_t subset_cap = Limits{}.subset_cap);

} // namespace crithg
