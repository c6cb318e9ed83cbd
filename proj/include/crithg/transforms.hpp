#pragma once

#include "crithg/config.hpp"
#include "crithg/hypergraph.hpp"
#include "crithg/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace crithg {

// |E(H1)| * |E(H2)|^{r1}, the exact product edge count, computed before any
// materialization. Both inputs must carry uniformity tags.
BigInt wreath_edge_count(const Hypergraph& h1, const Hypergraph& h2);

// The wreath product: one block of V(H2) per vertex of H1, vertex (v, u)
// numbered v*|V(H2)|+u; an edge per pair (outer edge e, choice of one
// H2-edge per block of e). r1*r2-uniform on |V1|*|V2| vertices. Refuses
// (with the exact predicted count) when the edge count exceeds the cap.
Hypergraph wreath_product(const Hypergraph& h1, const Hypergraph& h2,
                          std::uint64_t edge_cap = Limits{}.edge_cap);

/// Lazy enumeration of product edges in lexicographic order of
/// (outer edge index, inner choice indices). Yields each edge exactly once;
/// usable when the full product exceeds the materialization cap.
class WreathEdgeStream {
public:
    WreathEdgeStream(Hypergraph h1, Hypergraph h2);

    std::optional<Edge> next();
    const BigInt& total() const { return total_; }

private:
    Hypergraph h1_, h2_;
    BigInt total_;
    std::size_t outer_ = 0;          // index into E(H1)
    std::vector<std::size_t> choice_; // digit i: edge of H2 for block i of the outer edge
    bool done_ = false;
};

// Raise uniformity by one: add a fresh (r+1)-set S of vertices, join every
// old edge to every vertex of S, and add S itself. (r+1)*|E|+1 edges on
// |V|+r+1 vertices; preserves criticality of critical inputs. Criticality
// of the input is the caller's responsibility unless `paranoid` is set,
// which verifies it with the solver first.
Hypergraph add_one(const Hypergraph& h, std::uint64_t edge_cap = Limits{}.edge_cap,
                   bool paranoid = false,
                   std::uint64_t node_budget = Limits{}.solver_node_budget);

} // namespace crithg
