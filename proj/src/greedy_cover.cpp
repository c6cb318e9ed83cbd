#include "crithg/greedy_cover.hpp"

#include "crithg/errors.hpp"
#include "crithg/kernels.hpp"
#include "crithg/numeric.hpp"

#include <string>

namespace crithg {

GreedyCoverResult greedy_covering(int n, int r, std::uint64_t subset_cap) {
    if (r < 2 || n < 2 * r - 1)
        throw DomainError("greedy_covering: need n >= 2r-1 >= 3");
    const BigInt n_subsets = binomial(n, r - 1);
    const BigInt n_candidates = binomial(n, r);
    if (n_subsets > subset_cap || n_candidates > subset_cap)
        throw CapExceededError("greedy_covering needs " + n_subsets.str() + " subsets and " +
                                   n_candidates.str() + " candidate edges, cap is " +
                                   std::to_string(subset_cap),
                               (n_subsets > n_candidates ? n_subsets : n_candidates).str());

    // Candidate edges: every r-subset, lexicographic. A target (n-r+1)-set
    // contains an edge iff the edge avoids the target's (r-1)-vertex
    // complement, so the uncovered state lives on (r-1)-subsets.
    std::vector<Edge> candidates;
    candidates.reserve(static_cast<std::size_t>(n_candidates));
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    do {
        candidates.push_back(comb);
    } while (next_combination(comb, n));
    const BitMatrix cand_rows = BitMatrix::from_edges(n, candidates);

    BitMatrix uncovered = BitMatrix::empty(n, static_cast<std::size_t>(n_subsets));
    std::vector<int> sub(r - 1);
    for (int i = 0; i < r - 1; ++i) sub[i] = i;
    do {
        uncovered.push_row(sub);
    } while (next_combination(sub, n));

    GreedyCoverResult result{Hypergraph(n, {}, r), {}};
    std::vector<Edge> chosen;
    while (uncovered.rows > 0) {
        const RoundScan scan = greedy_round_scan(cand_rows, uncovered);
        // The averaging argument guarantees a positive gain while anything
        // is uncovered; a zero here would mean broken bookkeeping.
        if (scan.best_gain == 0)
            throw DomainError("greedy_covering: no candidate makes progress (internal error)");

        const std::uint64_t* em = cand_rows.row(scan.best_index);
        BitMatrix still = BitMatrix::empty(n, uncovered.rows - scan.best_gain);
        for (std::size_t u = 0; u < uncovered.rows; ++u) {
            if (masks_intersect(em, uncovered.row(u), uncovered.words)) {
                const std::uint64_t* row = uncovered.row(u);
                still.bits.insert(still.bits.end(), row, row + uncovered.words);
                ++still.rows;
            }
        }
        uncovered = std::move(still);

        chosen.push_back(candidates[scan.best_index]);
        result.rounds.push_back(
            GreedyRound{candidates[scan.best_index], scan.best_gain, uncovered.rows});
    }
    result.hypergraph = Hypergraph(n, std::move(chosen), r);
    return result;
}

} // namespace crithg
