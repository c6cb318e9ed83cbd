#pragma once

// Test-only helpers kept deliberately independent of the library internals:
// brute-force enumeration oracles the implementation is checked against.

#include "crithg/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace testutil {

// Binomial via Pascal's triangle, independent of crithg::binomial.
inline std::uint64_t pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

inline bool edges_intersect(const crithg::Edge& a, const crithg::Edge& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return true;
    return false;
}

inline bool set_covers(const std::vector<int>& cover, const std::vector<crithg::Edge>& edges) {
    for (const auto& e : edges) {
        bool hit = false;
        for (int v : e)
            if (std::find(cover.begin(), cover.end(), v) != cover.end()) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// Exact cover number by enumerating vertex subsets in increasing size.
inline int exhaustive_cover_number(const crithg::Hypergraph& h) {
    if (h.edge_count() == 0) return 0;
    const int n = h.n();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            if (set_covers(comb, h.edges())) return k;
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return n + 1; // unreachable for non-empty edges
}

// Does every k-subset of vertices contain an edge? Direct enumeration.
inline bool exhaustive_covering_property(const crithg::Hypergraph& h, int k) {
    const int n = h.n();
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    if (k == 0) return false; // the empty set contains no (non-empty) edge
    while (true) {
        bool contains_edge = false;
        for (const auto& e : h.edges()) {
            if (std::includes(comb.begin(), comb.end(), e.begin(), e.end())) {
                contains_edge = true;
                break;
            }
        }
        if (!contains_edge) return false;
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return true;
}

// All r-subsets of {0..n-1} in lexicographic order (independent enumeration).
inline std::vector<crithg::Edge> all_r_subsets(int n, int r) {
    std::vector<crithg::Edge> out;
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    while (true) {
        out.push_back(comb);
        int i = r - 1;
        while (i >= 0 && comb[i] == n - r + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

// Minimum size of a valid family over ALL subfamilies of the r-subsets
// (bitmask enumeration; use only when C(n,r) <= ~20). A family is valid when
// it is intersecting (for f) and its cover number is exactly r (for f) or at
// least r (for U). Returns -1 when no family is valid.
inline int tiny_extremal_oracle(int n, int r, bool intersecting_required) {
    const auto cands = all_r_subsets(n, r);
    const int m = static_cast<int>(cands.size());
    int best = -1;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const int size = __builtin_popcount(mask);
        if (best != -1 && size >= best) continue;
        std::vector<crithg::Edge> fam;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) fam.push_back(cands[i]);
        if (intersecting_required) {
            bool ok = true;
            for (std::size_t a = 0; a < fam.size() && ok; ++a)
                for (std::size_t b = a + 1; b < fam.size(); ++b)
                    if (!edges_intersect(fam[a], fam[b])) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
        }
        const crithg::Hypergraph h(n, fam, r);
        const int tau = exhaustive_cover_number(h);
        const bool valid = intersecting_required ? tau == r : tau >= r;
        if (valid) best = size;
    }
    return best;
}

// The cyclic 7-point plane: lines {i, i+1, i+3} mod 7. A labeling of the
// 3-uniform 7-line plane that the generator does NOT produce, useful as an
// independent intersecting/tau fixture.
inline crithg::Hypergraph cyclic_fano() {
    std::vector<crithg::Edge> lines;
    for (int i = 0; i < 7; ++i) {
        crithg::Edge e{i % 7, (i + 1) % 7, (i + 3) % 7};
        std::sort(e.begin(), e.end());
        lines.push_back(std::move(e));
    }
    return crithg::Hypergraph(7, std::move(lines), 3);
}

// Deterministic random r-uniform hypergraph with m distinct edges.
inline crithg::Hypergraph random_uniform(int n, int r, int m, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::set<crithg::Edge> edges;
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    while (static_cast<int>(edges.size()) < m) {
        std::shuffle(verts.begin(), verts.end(), rng);
        crithg::Edge e(verts.begin(), verts.begin() + r);
        std::sort(e.begin(), e.end());
        edges.insert(std::move(e));
    }
    return crithg::Hypergraph(n, std::vector<crithg::Edge>(edges.begin(), edges.end()), r);
}

} // namespace testutil
