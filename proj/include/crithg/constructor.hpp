#pragma once

#include "crithg/config.hpp"
#include "crithg/cover.hpp"
#include "crithg/generators.hpp"
#include "crithg/hypergraph.hpp"
#include "crithg/numeric.hpp"

#include <optional>
#include <string>

namespace crithg {

enum class PlanCase { complete_only, kahn_base_only, product_case_small_n, product_case_large_n };

std::string to_string(PlanCase c);

/// How build_critical will assemble an n-vertex r-uniform critical
/// hypergraph: either a single padded base, or a wreath product of two bases
/// of uniformities r1 and r2 followed by t uniformity-raising steps
/// (r1*r2 + t = r) and padding with isolated vertices up to n.
struct ConstructionPlan {
    PlanCase plan_case = PlanCase::complete_only;
    int n = 0, r = 0;
    int r1 = 0, r2 = 0, t = 0;
    std::optional<BaseChoice> base1; // single base for the *_only cases
    std::optional<BaseChoice> base2; // second factor for product cases
    int vertices_before_padding = 0; // exact count before isolated-vertex padding
    BigInt predicted_edges;          // exact final edge count
    // Anchor values the search seeded from (B = 4): floor(n/(4Br)) and
    // floor(8Br^2/n). Recorded for diagnostics.
    int anchor_r2_small = 0;
    int anchor_r1_large = 0;
};

struct BuildResult {
    Hypergraph hypergraph;
    ConstructionPlan plan;
    std::optional<CriticalityReport> verified;
};

// Choose the cheapest feasible plan (fewest predicted edges; ties broken by
// r2, then r1, then case order) among padded single bases and all product
// splits whose pre-padding vertex count fits n and edge count fits the cap.
// Throws DomainError for n < 2r-1 and CapExceededError (carrying the
// cheapest infeasible cost) when nothing fits.
ConstructionPlan plan_construction(int n, int r, std::uint64_t edge_cap = Limits{}.edge_cap);

// Execute the plan: build factors, take the wreath product, apply the
// uniformity-raising step t times, pad with isolated vertices to exactly n.
// Realized counts are checked against the plan. With verify set, attaches a
// solver criticality certificate (degrades to absent on budget exhaustion).
BuildResult build_critical(int n, int r, std::uint64_t edge_cap = Limits{}.edge_cap,
                           bool verify = false,
                           std::uint64_t node_budget = Limits{}.solver_node_budget);

// predicted_edges of the chosen plan. Never exceeds C(2r-1, r) while the
// complete fallback fits the cap.
BigInt predicted_edge_bound(int n, int r, std::uint64_t edge_cap = Limits{}.edge_cap);

} // namespace crithg
