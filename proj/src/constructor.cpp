#include "crithg/constructor.hpp"

#include "crithg/errors.hpp"
#include "crithg/transforms.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>
#include <vector>

namespace crithg {

std::string to_string(PlanCase c) {
    switch (c) {
    case PlanCase::complete_only: return "complete_only";
    case PlanCase::kahn_base_only: return "kahn_base_only";
    case PlanCase::product_case_small_n: return "product_case_small_n";
    case PlanCase::product_case_large_n: return "product_case_large_n";
    }
    return "?";
}

namespace {

constexpr long long kAnchorB = 4; // the recipe's constant floor

int case_rank(PlanCase c) {
    switch (c) {
    case PlanCase::complete_only: return 0;
    case PlanCase::kahn_base_only: return 1;
    case PlanCase::product_case_small_n: return 2;
    case PlanCase::product_case_large_n: return 3;
    }
    return 4;
}

bool plan_less(const ConstructionPlan& a, const ConstructionPlan& b) {
    return std::forward_as_tuple(a.predicted_edges, a.r2, a.r1, case_rank(a.plan_case)) <
           std::forward_as_tuple(b.predicted_edges, b.r2, b.r1, case_rank(b.plan_case));
}

// Apply t uniformity-raising steps starting at uniformity u0 to exact counts.
void apply_augment_costs(int u0, int t, BigInt& edges, long long& vertices) {
    for (int u = u0; u < u0 + t; ++u) {
        edges = edges * (u + 1) + 1;
        vertices += u + 1;
    }
}

// Factor splits r1*r2 + t = r with r1, r2 >= 2 and t < max(r1, r2).
// At desk scale (r <= 24) this enumerates every split; beyond that it keeps
// the window around the seed anchors plus prime+1 snap points for r2.
std::vector<std::tuple<int, int, int>> factor_splits(int n, int r) {
    std::set<std::tuple<int, int, int>> splits;
    auto add = [&](int r1, int r2) {
        if (r1 < 2 || r2 < 2 || r1 * r2 > r) return;
        const int t = r - r1 * r2;
        if (t < std::max(r1, r2)) splits.insert({r1, r2, t});
    };
    auto add_r2 = [&](int r2) {
        if (r2 >= 2) add(r / r2, r2);
    };
    if (r <= 24) {
        for (int r2 = 2; r2 * 2 <= r; ++r2) {
            add(r / r2, r2);       // r2-driven split
            add_r2(r / r2);        // r1-driven split, same pair mirrored
        }
    } else {
        const int window = 5;
        const int anchor_small = static_cast<int>(static_cast<long long>(n) / (4 * kAnchorB * r));
        const int anchor_large_r1 = static_cast<int>(8 * kAnchorB * static_cast<long long>(r) * r / n);
        for (int d = -window; d <= window; ++d) {
            add_r2(anchor_small + d);
            if (anchor_large_r1 + d >= 2) add(anchor_large_r1 + d, r / (anchor_large_r1 + d));
        }
        // Snap r2 to q+1 for primes q, where plane bases exist.
        for (long long q = 2; q + 1 <= r / 2; q = (q == 2 ? 3 : q + 2))
            if (is_prime(q)) add_r2(static_cast<int>(q) + 1);
    }
    return {splits.begin(), splits.end()};
}

} // namespace

ConstructionPlan plan_construction(int n, int r, std::uint64_t edge_cap) {
    if (r < 2 || n < 2 * r - 1)
        throw DomainError("n < 2r-1: no such hypergraph exists (need n >= 2r-1 >= 3)");

    const int anchor_r2_small = static_cast<int>(static_cast<long long>(n) / (4 * kAnchorB * r));
    const int anchor_r1_large =
        static_cast<int>(8 * kAnchorB * static_cast<long long>(r) * r / std::max(n, 1));
    // Small-n product regime per the recipe: n < 2B * r^{3/2}.
    const bool small_n = static_cast<long long>(n) * n < 4 * kAnchorB * kAnchorB *
                                                             static_cast<long long>(r) * r * r;

    const std::uint64_t no_cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<ConstructionPlan> feasible;
    std::vector<ConstructionPlan> infeasible; // kept for diagnostics

    auto classify = [&](ConstructionPlan&& p) {
        if (p.vertices_before_padding <= n && p.predicted_edges <= edge_cap)
            feasible.push_back(std::move(p));
        else
            infeasible.push_back(std::move(p));
    };

    auto stamp = [&](ConstructionPlan& p) {
        p.n = n;
        p.r = r;
        p.anchor_r2_small = anchor_r2_small;
        p.anchor_r1_large = anchor_r1_large;
    };

    // Single padded bases.
    for (const BaseChoice& base : base_candidates(r, no_cap)) {
        ConstructionPlan p;
        stamp(p);
        p.plan_case = base.kind == BaseChoice::Kind::complete ? PlanCase::complete_only
                                                              : PlanCase::kahn_base_only;
        p.r1 = r;
        p.r2 = 1;
        p.t = 0;
        p.base1 = base;
        p.vertices_before_padding = base.vertices;
        p.predicted_edges = base.predicted_edges;
        classify(std::move(p));
    }

    // Product plans over factor splits and base pairs.
    for (const auto& [r1, r2, t] : factor_splits(n, r)) {
        for (const BaseChoice& b1 : base_candidates(r1, no_cap))
            for (const BaseChoice& b2 : base_candidates(r2, no_cap)) {
                ConstructionPlan p;
                stamp(p);
                p.plan_case =
                    small_n ? PlanCase::product_case_small_n : PlanCase::product_case_large_n;
                p.r1 = r1;
                p.r2 = r2;
                p.t = t;
                p.base1 = b1;
                p.base2 = b2;
                BigInt edges = b1.predicted_edges;
                for (int i = 0; i < r1; ++i) edges *= b2.predicted_edges;
                long long vertices = static_cast<long long>(b1.vertices) * b2.vertices;
                apply_augment_costs(r1 * r2, t, edges, vertices);
                p.vertices_before_padding = static_cast<int>(
                    std::min<long long>(vertices, std::numeric_limits<int>::max()));
                p.predicted_edges = std::move(edges);
                classify(std::move(p));
            }
    }

    if (feasible.empty()) {
        auto cheapest = std::min_element(infeasible.begin(), infeasible.end(), plan_less);
        throw CapExceededError("no feasible construction plan for n=" + std::to_string(n) +
                                   ", r=" + std::to_string(r) + " within edge cap " +
                                   std::to_string(edge_cap) + "; cheapest candidate needs " +
                                   cheapest->predicted_edges.str() + " edges on " +
                                   std::to_string(cheapest->vertices_before_padding) + " vertices",
                               cheapest->predicted_edges.str());
    }
    return *std::min_element(feasible.begin(), feasible.end(), plan_less);
}

BuildResult build_critical(int n, int r, std::uint64_t edge_cap, bool verify,
                           std::uint64_t node_budget) {
    ConstructionPlan plan = plan_construction(n, r, edge_cap);

    Hypergraph h = [&] {
        if (!plan.base2) return materialize_base(*plan.base1, edge_cap);
        Hypergraph h1 = materialize_base(*plan.base1, edge_cap);
        Hypergraph h2 = materialize_base(*plan.base2, edge_cap);
        Hypergraph prod = wreath_product(h1, h2, edge_cap);
        for (int s = 0; s < plan.t; ++s) prod = add_one(prod, edge_cap);
        return prod;
    }();

    if (h.n() != plan.vertices_before_padding || BigInt(h.edge_count()) != plan.predicted_edges ||
        !h.uniformity() || *h.uniformity() != r)
        throw DomainError("build_critical: realized counts diverge from the plan");

    BuildResult result{pad_isolated(h, n), std::move(plan), std::nullopt};
    if (verify) {
        CriticalityReport rep = is_critical(result.hypergraph, node_budget);
        if (rep.decided) result.verified = std::move(rep);
        // Budget exhaustion leaves `verified` absent; the build still succeeds.
    }
    return result;
}

BigInt predicted_edge_bound(int n, int r, std::uint64_t edge_cap) {
    return plan_construction(n, r, edge_cap).predicted_edges;
}

} // namespace crithg
