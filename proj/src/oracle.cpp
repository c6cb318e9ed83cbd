#include "crithg/oracle.hpp"

#include "crithg/bounds.hpp"
#include "crithg/cover.hpp"
#include "crithg/errors.hpp"
#include "crithg/kernels.hpp"
#include "crithg/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace crithg {

std::string to_string(Quantity q) { return q == Quantity::f ? "f" : "U"; }

namespace {

// Compare two vertex-set masks in the lexicographic order of their sorted
// vertex lists: the set owning the lowest differing bit is the smaller one.
int mask_cmp(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t d = a[w] ^ b[w];
        if (d) {
            const std::uint64_t low = d & (~d + 1);
            return (a[w] & low) ? -1 : 1;
        }
    }
    return 0;
}

struct FamilySearch {
    int n, r, m_target = 0;
    bool intersecting_required;
    const std::vector<Edge>& cands;
    const BitMatrix& rows;
    std::vector<std::pair<int, int>> transpositions;

    std::vector<std::size_t> chosen;
    std::vector<std::size_t> found;
    std::uint64_t nodes = 0, budget;
    bool budget_hit = false;

    std::vector<std::uint64_t> scratch;      // permuted family masks
    std::vector<std::uint64_t> cover_mask;   // partial-cover DFS state
    std::vector<const std::uint64_t*> order; // sort buffer

    FamilySearch(int n_, int r_, bool intersecting, const std::vector<Edge>& cands_,
                 const BitMatrix& rows_, std::uint64_t budget_)
        : n(n_), r(r_), intersecting_required(intersecting), cands(cands_), rows(rows_),
          budget(budget_), cover_mask(rows_.words, 0) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) transpositions.emplace_back(a, b);
    }

    bool intersects_all_chosen(std::size_t c) const {
        for (std::size_t i : chosen)
            if (!rows.rows_intersect(c, i)) return false;
        return true;
    }

    // Does the partial family admit a cover of size <= k?
    bool partial_has_cover(int k) {
        std::fill(cover_mask.begin(), cover_mask.end(), 0);
        return cover_dfs(k);
    }

    bool cover_dfs(int k) {
        std::size_t uncovered = chosen.size();
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (!masks_intersect(cover_mask.data(), rows.row(chosen[i]), rows.words)) {
                uncovered = i;
                break;
            }
        if (uncovered == chosen.size()) return true;
        if (k == 0) return false;
        for (Vertex v : cands[chosen[uncovered]]) {
            cover_mask[static_cast<std::size_t>(v) / 64] ^= 1ull << (v % 64);
            if (cover_dfs(k - 1)) return true;
            cover_mask[static_cast<std::size_t>(v) / 64] ^= 1ull << (v % 64);
        }
        return false;
    }

    // Reject families that a single vertex transposition maps to a
    // lexicographically smaller family. The overall lexicographic minimum of
    // each isomorphism class (and each of its prefixes) always survives.
    bool is_minimal() {
        const std::size_t j = chosen.size();
        const std::size_t words = rows.words;
        scratch.resize(j * words);
        order.resize(j);
        for (const auto& [a, b] : transpositions) {
            bool changed = false;
            for (std::size_t i = 0; i < j; ++i) {
                const std::uint64_t* src = rows.row(chosen[i]);
                std::uint64_t* dst = scratch.data() + i * words;
                std::copy(src, src + words, dst);
                const int ba = (src[static_cast<std::size_t>(a) / 64] >> (a % 64)) & 1;
                const int bb = (src[static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1;
                if (ba != bb) {
                    dst[static_cast<std::size_t>(a) / 64] ^= 1ull << (a % 64);
                    dst[static_cast<std::size_t>(b) / 64] ^= 1ull << (b % 64);
                    changed = true;
                }
            }
            if (!changed) continue;
            for (std::size_t i = 0; i < j; ++i) order[i] = scratch.data() + i * words;
            std::sort(order.begin(), order.end(), [words](const std::uint64_t* x, const std::uint64_t* y) {
                return mask_cmp(x, y, words) < 0;
            });
            int cmp = 0;
            for (std::size_t i = 0; i < j && cmp == 0; ++i)
                cmp = mask_cmp(order[i], rows.row(chosen[i]), words);
            if (cmp < 0) return false;
        }
        return true;
    }

    bool dfs(std::size_t next_index) {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        const int j = static_cast<int>(chosen.size());
        const int needed_tau = r - (m_target - j);
        if (needed_tau >= 1 && partial_has_cover(needed_tau - 1)) return false;
        if (j == m_target) {
            found = chosen;
            return true;
        }
        for (std::size_t c = next_index; c + (m_target - j) <= cands.size(); ++c) {
            if (intersecting_required && !intersects_all_chosen(c)) continue;
            chosen.push_back(c);
            if (is_minimal()) {
                if (dfs(c + 1)) return true;
                if (budget_hit) {
                    chosen.pop_back();
                    return false;
                }
            }
            chosen.pop_back();
        }
        return false;
    }
};

OracleResult run_oracle(Quantity quantity, int n, int r, const OracleOptions& opts) {
    if (r < 2 || n < 2 * r - 1)
        throw DomainError("oracle: need n >= 2r-1 >= 3");
    const BigInt candidate_count = binomial(n, r);
    if (candidate_count > opts.candidate_cap)
        throw DomainError("oracle: C(n,r) = " + candidate_count.str() +
                          " candidate edges exceeds the gate " + std::to_string(opts.candidate_cap));

    std::vector<Edge> cands;
    cands.reserve(static_cast<std::size_t>(candidate_count));
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    do {
        cands.push_back(comb);
    } while (next_combination(comb, n));
    const BitMatrix rows = BitMatrix::from_edges(n, cands);

    OracleResult result;
    result.quantity = quantity;
    result.n = n;
    result.r = r;

    // Trivial valid witness: the complete family on 2r-1 of the vertices.
    const int trivial_ub = static_cast<int>(binomial(2 * r - 1, r));

    const int floor_m = std::max(1, static_cast<int>(de_caen_ceil(n, r)));
    FamilySearch search(n, r, quantity == Quantity::f, cands, rows, opts.node_budget);

    for (int m = floor_m; m <= static_cast<int>(cands.size()); ++m) {
        search.m_target = m;
        const bool ok = search.dfs(0);
        if (search.budget_hit) {
            result.exhaustive = false;
            result.lower_bound = m; // all smaller sizes were fully refuted
            result.upper_bound = trivial_ub;
            result.nodes = search.nodes;
            return result;
        }
        if (ok) {
            std::vector<Edge> edges;
            edges.reserve(search.found.size());
            for (std::size_t c : search.found) edges.push_back(cands[c]);
            Hypergraph witness(n, std::move(edges), r);

            // Independent re-verification of the witness.
            if (quantity == Quantity::f) {
                if (!is_intersecting(witness))
                    throw std::logic_error("oracle: f-witness is not intersecting");
                const CoverCertificate cert = cover_number(witness);
                if (!cert.optimal || cert.tau != r)
                    throw std::logic_error("oracle: f-witness has tau != r");
            } else {
                if (!has_covering_property(witness, n - r + 1))
                    throw std::logic_error("oracle: U-witness fails the covering property");
            }

            result.value = m;
            result.witness = std::move(witness);
            result.exhaustive = true;
            result.lower_bound = m;
            result.upper_bound = m;
            result.nodes = search.nodes;
            return result;
        }
    }
    throw std::logic_error("oracle: no valid family up to the complete candidate set");
}

} // namespace

OracleResult brute_force_f(int n, int r, const OracleOptions& opts) {
    return run_oracle(Quantity::f, n, r, opts);
}

OracleResult brute_force_U(int n, int r, const OracleOptions& opts) {
    return run_oracle(Quantity::U, n, r, opts);
}

} // namespace crithg
