#pragma once

#include "crithg/config.hpp"
#include "crithg/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace crithg {

enum class Quantity { f, U };

std::string to_string(Quantity q);

/// Exact extremal value with a witness, or a bounds interval when the node
/// budget ran out. Witnesses are re-verified with the public predicates
/// before being returned, never trusted from search state.
struct OracleResult {
    Quantity quantity = Quantity::f;
    int n = 0, r = 0;
    std::optional<int> value;
    std::optional<Hypergraph> witness; // lexicographically least minimum witness
    bool exhaustive = false;
    int lower_bound = 0, upper_bound = 0;
    std::uint64_t nodes = 0;
};

struct OracleOptions {
    std::uint64_t node_budget = Limits{}.oracle_node_budget;
    std::uint64_t candidate_cap = Limits{}.oracle_candidate_cap;
};

// Minimum edge count of an n-vertex r-uniform intersecting hypergraph with
// cover number exactly r. Iterative deepening on the family size starting at
// the de Caen floor; branches prune on the intersecting property, on cover
// achievability (tau of a partial family can lag the target by at most the
// number of edges still to add), and on lexicographic minimality under
// vertex transpositions (sound: it only discards isomorphic duplicates).
OracleResult brute_force_f(int n, int r, const OracleOptions& opts = {});

// Same skeleton without the intersecting constraint: minimum edge count of
// an r-uniform hypergraph on n vertices in which every (n-r+1)-subset
// contains an edge.
OracleResult brute_force_U(int n, int r, const OracleOptions& opts = {});

} // namespace crithg
