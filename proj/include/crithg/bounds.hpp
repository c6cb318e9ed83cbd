#pragma once

#include "crithg/config.hpp"
#include "crithg/hypergraph.hpp"
#include "crithg/numeric.hpp"

#include <optional>

namespace crithg {

// Double-counting lower bound C(n, r-1) / C(n-r, r-1) on the minimum edge
// count of any n-vertex r-uniform hypergraph with cover number >= r.
// Exact rational; requires n >= 2r-1 >= 3.
BigRat de_caen_bound(int n, int r);
BigInt de_caen_ceil(int n, int r);

// Refinement (n / 5r) * de_caen, a strict lower bound valid for
// 2r-1 <= n < r^2; throws DomainError outside that range.
BigRat prop_lower_bound(int n, int r);

// The t-parameterized counting bound t * C(n, r-t) / C(n-r, r-t) for
// 1 <= t <= r-1; t = 1 recovers de_caen_bound exactly.
BigRat counting_lower_bound_general(int n, int r, int t);

// ceil(p^{-1} * ln C(n, r-1)) with p = C(n-r+1, r) / C(n, r): an upper bound
// on the minimum size of an r-uniform hypergraph on n vertices whose every
// (n-r+1)-subset contains an edge. Natural log, rounded up.
BigInt greedy_upper_estimate_U(int n, int r);

// Closed-form reference value for that covering minimum, defined only in its
// validity window (r even: 3r^2 <= 4n <= 4r^2; r odd: 3r^2+r <= 4n <= 4r^2).
std::optional<BigInt> sidorenko_reference(int n, int r);

// Complement within the complete r-uniform hypergraph on the same vertices.
// Requires a uniformity tag; |E(H)| + |E(complement)| = C(n, r).
Hypergraph complement_duality(const Hypergraph& h, std::uint64_t edge_cap = Limits{}.edge_cap);

struct BoundsReport {
    int n = 0, r = 0;
    BigRat de_caen;
    BigInt de_caen_ceil;
    std::optional<BigRat> prop_lower;   // only in its validity range
    BigInt greedy_upper_U;
    std::optional<BigInt> sidorenko_U;  // only in its validity range
    std::optional<BigInt> trivial_upper_complete; // C(2r-1, r) when under the cap
};

BoundsReport bounds_report(int n, int r, std::uint64_t edge_cap = Limits{}.edge_cap);

// Conservative check of n/(5r) <= U/de_caen < 2r*log2(n/r); the right-hand
// side is evaluated as a rational lower bound so a `true` answer is sound.
bool covering_sandwich_holds(int n, int r, const BigInt& covering_minimum);

} // namespace crithg
