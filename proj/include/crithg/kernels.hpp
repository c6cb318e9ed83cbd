#pragma once

#include "crithg/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace crithg {

/// Row-major bitset matrix: one fixed-width row of n bits per edge.
/// Flat storage so the scanning kernels stay cache-friendly.
struct BitMatrix {
    int n = 0;
    std::size_t words = 0;
    std::size_t rows = 0;
    std::vector<std::uint64_t> bits;

    static BitMatrix from_edges(int n, const std::vector<Edge>& edges);
    static BitMatrix empty(int n, std::size_t reserve_rows = 0);

    void push_row(const Edge& e);
    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }

    bool rows_intersect(std::size_t i, std::size_t j) const {
        const std::uint64_t* a = row(i);
        const std::uint64_t* b = row(j);
        for (std::size_t w = 0; w < words; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }
};

bool masks_intersect(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

// ---------------------------------------------------------------------------
// Data-parallel kernels. Each comes in a serial reference form and an
// OpenMP form; both return identical results for identical input (the
// parallel forms reduce with deterministic index tie-breaks), which the
// test suite asserts and tools/bench_kernels measures.
// ---------------------------------------------------------------------------

// Lexicographically first pair (i < j) of disjoint rows, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_disjoint_pair_serial(const BitMatrix& m);
std::optional<std::pair<std::size_t, std::size_t>> first_disjoint_pair_parallel(const BitMatrix& m);

// Scan all C(n, size) vertex subsets in lexicographic order; return the
// first one that intersects every row of `m` (i.e. is a cover), if any.
// Requires C(n, size) to fit the precomputed 64-bit rank space.
std::optional<Edge> find_covering_subset_serial(const BitMatrix& m, int size);
std::optional<Edge> find_covering_subset_parallel(const BitMatrix& m, int size);

// One greedy covering round: over candidate rows, count how many
// `uncovered` rows each candidate is disjoint from; return the maximum
// count and the smallest candidate index attaining it.
struct RoundScan {
    std::size_t best_index = 0;
    std::uint64_t best_gain = 0;
};
RoundScan greedy_round_scan_serial(const BitMatrix& candidates, const BitMatrix& uncovered);
RoundScan greedy_round_scan_parallel(const BitMatrix& candidates, const BitMatrix& uncovered);

// Dispatchers used by the library: parallel when built with OpenMP.
std::optional<std::pair<std::size_t, std::size_t>> first_disjoint_pair(const BitMatrix& m);
std::optional<Edge> find_covering_subset(const BitMatrix& m, int size);
RoundScan greedy_round_scan(const BitMatrix& candidates, const BitMatrix& uncovered);

// ---------------------------------------------------------------------------
// Combination enumeration helpers (lexicographic order over sorted k-subsets
// of {0..n-1}), shared by the kernels, the generators and the oracle.
// ---------------------------------------------------------------------------

// Advance `comb` to the next k-subset in lexicographic order; false at the end.
bool next_combination(std::vector<int>& comb, int n);

// 64-bit binomial with saturation at UINT64_MAX (for rank-space sizing).
std::uint64_t binomial_u64(int n, int k);

// The combination of `rank` (lexicographic, 0-based) among k-subsets of {0..n-1}.
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank);

} // namespace crithg
