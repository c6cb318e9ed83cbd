#pragma once

#include "crithg/config.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace crithg {

using Vertex = int;
using Edge = std::vector<Vertex>; // sorted ascending, no repeats

/// Immutable hypergraph on vertices 0..n-1. Edges are kept as sorted,
/// duplicate-free vertex lists and the edge set itself is stored in
/// lexicographic order, so equal hypergraphs serialize byte-identically.
/// An optional uniformity tag r is validated eagerly on construction.
class Hypergraph {
public:
    Hypergraph(int n, std::vector<Edge> edges, std::optional<int> uniformity = std::nullopt);

    int n() const { return n_; }
    std::optional<int> uniformity() const { return r_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && r_ == other.r_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::optional<int> r_;
    std::vector<Edge> edges_;
};

struct HypergraphStats {
    int n = 0;
    std::optional<int> r;
    std::size_t edge_count = 0;
    int isolated_vertex_count = 0;
    bool intersecting = false;
    std::optional<int> tau; // filled by callers that ran the solver
};

// True iff every edge has exactly r vertices (vacuously true on an empty edge set).
bool is_uniform(const Hypergraph& h, int r);

// True iff every pair of edges shares a vertex. Pairwise bitset check.
bool is_intersecting(const Hypergraph& h);

// True iff every k-subset of vertices contains an edge (0 <= k <= n).
// Equivalent to tau(h) >= n-k+1. Enumerates the complementary
// (n-k)-subsets and checks that none of them is a cover; refuses with
// CapExceededError when C(n,k) exceeds subset_cap.
bool has_covering_property(const Hypergraph& h, int k,
                           std::uint64_t subset_cap = Limits{}.subset_cap);

// Same edge set on n_target >= h.n() vertices.
Hypergraph pad_isolated(const Hypergraph& h, int n_target);

// Drop isolated vertices and relabel the rest to 0..m-1, preserving order.
// An edgeless hypergraph collapses to n = 0.
Hypergraph remove_isolated(const Hypergraph& h);

// Structure summary (no solver run; tau left empty).
HypergraphStats compute_stats(const Hypergraph& h);

} // namespace crithg
