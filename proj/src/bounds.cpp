#include "crithg/bounds.hpp"

#include "crithg/errors.hpp"
#include "crithg/kernels.hpp"

#include <algorithm>
#include <string>

namespace crithg {

namespace {

void require_range(int n, int r, const char* who) {
    if (r < 2 || n < 2 * r - 1)
        throw DomainError(std::string(who) + ": need n >= 2r-1 >= 3");
}

} // namespace

BigRat de_caen_bound(int n, int r) {
    require_range(n, r, "de_caen_bound");
    return BigRat(binomial(n, r - 1), binomial(n - r, r - 1));
}

BigInt de_caen_ceil(int n, int r) { return ceil_rat(de_caen_bound(n, r)); }

BigRat prop_lower_bound(int n, int r) {
    require_range(n, r, "prop_lower_bound");
    if (n >= r * r)
        throw DomainError("prop_lower_bound: valid only for 2r-1 <= n < r^2 (got n=" +
                          std::to_string(n) + ", r=" + std::to_string(r) + "); fall back to de Caen");
    return BigRat(n, 5 * r) * de_caen_bound(n, r);
}

BigRat counting_lower_bound_general(int n, int r, int t) {
    require_range(n, r, "counting_lower_bound_general");
    if (t < 1 || t > r - 1)
        throw DomainError("counting_lower_bound_general: need 1 <= t <= r-1");
    return BigRat(t) * BigRat(binomial(n, r - t), binomial(n - r, r - t));
}

BigInt greedy_upper_estimate_U(int n, int r) {
    require_range(n, r, "greedy_upper_estimate_U");
    const BigRat inv_p(binomial(n, r), binomial(n - r + 1, r));
    return ceil_mul_ln_upper(inv_p, binomial(n, r - 1));
}

std::optional<BigInt> sidorenko_reference(int n, int r) {
    if (r < 2) return std::nullopt;
    const long long n4 = 4LL * n;
    if (r % 2 == 0) {
        if (n4 < 3LL * r * r || n > static_cast<long long>(r) * r) return std::nullopt;
        return BigInt(3LL * r - (2LL * n) / r);
    }
    if (n4 < 3LL * r * r + r || n > static_cast<long long>(r) * r) return std::nullopt;
    return BigInt(3LL * r - (2LL * (n - r)) / (r - 1));
}

Hypergraph complement_duality(const Hypergraph& h, std::uint64_t edge_cap) {
    if (!h.uniformity())
        throw DomainError("complement_duality requires a uniformity tag");
    const int r = *h.uniformity();
    const BigInt total = binomial(h.n(), r);
    if (total > edge_cap)
        throw CapExceededError("complement needs enumerating " + total.str() +
                                   " r-subsets, cap is " + std::to_string(edge_cap),
                               total.str());

    // h.edges() is sorted lexicographically; merge against the full
    // lexicographic enumeration of r-subsets.
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(total) - h.edge_count());
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    std::size_t next_present = 0;
    do {
        if (next_present < h.edge_count() && h.edges()[next_present] == comb)
            ++next_present;
        else
            out.push_back(comb);
    } while (next_combination(comb, h.n()));
    return Hypergraph(h.n(), std::move(out), r);
}

BoundsReport bounds_report(int n, int r, std::uint64_t edge_cap) {
    require_range(n, r, "bounds_report");
    BoundsReport rep;
    rep.n = n;
    rep.r = r;
    rep.de_caen = de_caen_bound(n, r);
    rep.de_caen_ceil = ceil_rat(rep.de_caen);
    if (n < r * r) rep.prop_lower = prop_lower_bound(n, r);
    rep.greedy_upper_U = greedy_upper_estimate_U(n, r);
    rep.sidorenko_U = sidorenko_reference(n, r);
    if (const BigInt complete = binomial(2 * r - 1, r); complete <= edge_cap)
        rep.trivial_upper_complete = complete;
    return rep;
}

bool covering_sandwich_holds(int n, int r, const BigInt& covering_minimum) {
    require_range(n, r, "covering_sandwich_holds");
    const BigRat ratio = de_caen_bound(n, r);
    const BigRat normalized = BigRat(covering_minimum) / ratio;
    if (BigRat(n, 5 * r) > normalized) return false;
    // Strict upper side, checked against a lower bound of 2r*log2(n/r).
    return normalized < mul_log2_lower(BigRat(2 * r), BigRat(n, r));
}

} // namespace crithg
