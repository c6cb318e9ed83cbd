#pragma once

#include "crithg/config.hpp"
#include "crithg/hypergraph.hpp"
#include "crithg/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace crithg {

/// Records which base family realizes an r-uniform critical hypergraph and
/// at what exact cost. `vertices`/`predicted_edges` refer to the trimmed
/// (no isolated vertices) hypergraph that materialize_base produces.
struct BaseChoice {
    enum class Kind { complete, projective_plane, augmented_projective_plane };
    Kind kind = Kind::complete;
    long long q = 0;       // plane order; q = 1 is the degenerate plane (triangle)
    int augment_steps = 0; // uniformity-raising steps applied on top of the plane
    int uniformity = 0;
    int vertices = 0;
    BigInt predicted_edges;
};

std::string to_string(BaseChoice::Kind k);

// All C(m, r) r-subsets of {0..m-1}.
Hypergraph complete_uniform(int m, int r, std::uint64_t edge_cap = Limits{}.edge_cap);

// K_{2r-1}^{(r)} padded with one isolated vertex: 2r vertices, C(2r-1, r)
// edges, critical with tau = r.
Hypergraph complete_critical(int r, std::uint64_t edge_cap = Limits{}.edge_cap);

// Point-line incidence hypergraph of the projective plane of prime order q,
// built from the homogeneous-coordinate model over Z/qZ: q^2+q+1 points and
// lines, (q+1)-uniform, any two lines meet in exactly one point, tau = q+1.
// q = 1 yields the degenerate plane (the triangle).
Hypergraph projective_plane(long long q);

// The candidate base families for uniformity r with exact formula costs,
// cheapest first (ties: fewer vertices, then kind order). Entries whose edge
// count exceeds edge_cap are dropped.
std::vector<BaseChoice> base_candidates(int r, std::uint64_t edge_cap = Limits{}.edge_cap);

// Build the hypergraph a BaseChoice describes (trimmed of isolated vertices).
Hypergraph materialize_base(const BaseChoice& choice, std::uint64_t edge_cap = Limits{}.edge_cap);

// Cheapest available r-uniform critical base: projective plane of order r-1
// when prime, else an augmented smaller plane or the complete hypergraph,
// whichever has the fewest edges. Trimmed for use as a product factor.
std::pair<Hypergraph, BaseChoice> base_critical(int r, std::uint64_t edge_cap = Limits{}.edge_cap);

} // namespace crithg
