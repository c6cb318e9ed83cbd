#include "crithg/config.hpp"

#include <cstdlib>
#include <string>

namespace crithg {

namespace {

void read_env(const char* name, std::uint64_t& target) {
    if (const char* v = std::getenv(name)) {
        try {
            target = std::stoull(std::string(v));
        } catch (...) {
            // Malformed override: keep the default.
        }
    }
}

} // namespace

Limits Limits::from_env() {
    Limits lim;
    read_env("CRITHG_SOLVER_BUDGET", lim.solver_node_budget);
    read_env("CRITHG_ORACLE_BUDGET", lim.oracle_node_budget);
    read_env("CRITHG_EDGE_CAP", lim.edge_cap);
    read_env("CRITHG_SUBSET_CAP", lim.subset_cap);
    read_env("CRITHG_ORACLE_CANDIDATES", lim.oracle_candidate_cap);
    return lim;
}

} // namespace crithg
