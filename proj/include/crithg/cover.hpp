#pragma once

#include "crithg/config.hpp"
#include "crithg/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace crithg {

/// Result of an exact cover-number computation. When `optimal` is true the
/// search proved no cover of size tau-1 exists. Under an exhausted node
/// budget the certificate degrades to an interval: tau holds the best known
/// upper bound, `lower_bound` the largest size proved impossible plus one.
struct CoverCertificate {
    int tau = 0;
    Edge cover;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    int lower_bound = 0;
    bool budget_exhausted = false;
};

// Deterministic depth-bounded branching: pick the first uncovered edge in
// lexicographic order and branch on its vertices in ascending order.
// Returns a cover of size <= k if one exists.
std::optional<Edge> cover_at_most(const Hypergraph& h, int k);

// Exact tau via iterative deepening between a greedy disjoint-edge packing
// lower bound and a greedy max-degree cover upper bound.
CoverCertificate cover_number(const Hypergraph& h,
                              std::uint64_t node_budget = Limits{}.solver_node_budget);

// Greedy max-degree cover (deterministic: lowest vertex id wins ties).
Edge greedy_cover_upper(const Hypergraph& h);

// Greedy maximal disjoint-edge packing size, scanning edges in lexicographic
// order. A packing of size p proves tau >= p.
int greedy_packing_lower(const Hypergraph& h);

struct CriticalityReport {
    bool critical = false;
    bool intersecting = false;
    CoverCertificate cover;
    bool decided = true; // false when the budget ran out with tau still straddling r
    std::string detail;
};

// True iff h is intersecting and tau(h) equals its uniformity tag.
CriticalityReport is_critical(const Hypergraph& h,
                              std::uint64_t node_budget = Limits{}.solver_node_budget);

} // namespace crithg
