#pragma once

#include <cstdint>

namespace crithg {

// Caps and budgets shared across modules. CLI flags override these; the
// CRITHG_* environment variables override the defaults (useful in CI).
struct Limits {
    std::uint64_t solver_node_budget = 100'000'000;   // CRITHG_SOLVER_BUDGET
    std::uint64_t oracle_node_budget = 1'000'000'000; // CRITHG_ORACLE_BUDGET
    std::uint64_t edge_cap = 1'000'000;               // CRITHG_EDGE_CAP
    std::uint64_t subset_cap = 10'000'000;            // CRITHG_SUBSET_CAP
    std::uint64_t oracle_candidate_cap = 4096;        // CRITHG_ORACLE_CANDIDATES

    static Limits from_env();
};

} // namespace crithg
