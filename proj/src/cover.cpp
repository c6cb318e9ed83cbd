#include "crithg/cover.hpp"

#include "crithg/errors.hpp"
#include "crithg/kernels.hpp"

#include <algorithm>
#include <limits>

namespace crithg {

namespace {

enum class SearchStatus { Found, NotFound, Budget };

struct CoverSearch {
    const std::vector<Edge>& edges;
    BitMatrix rows;
    std::vector<std::uint64_t> chosen_mask;
    Edge chosen;
    std::uint64_t nodes = 0;
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();

    explicit CoverSearch(const Hypergraph& h)
        : edges(h.edges()), rows(BitMatrix::from_edges(h.n(), h.edges())),
          chosen_mask(rows.words, 0) {}

    // Index of the first edge missed by the current partial cover, or rows.rows.
    std::size_t first_uncovered() const {
        for (std::size_t i = 0; i < rows.rows; ++i)
            if (!masks_intersect(chosen_mask.data(), rows.row(i), rows.words)) return i;
        return rows.rows;
    }

    // Greedy disjoint packing of the still-uncovered edges; tau needs one
    // vertex per packed edge, so packing > k prunes the branch.
    int packing_bound(int limit) const {
        std::vector<std::uint64_t> packed(rows.words, 0);
        int count = 0;
        for (std::size_t i = 0; i < rows.rows && count <= limit; ++i) {
            const std::uint64_t* row = rows.row(i);
            if (masks_intersect(chosen_mask.data(), row, rows.words)) continue;
            if (masks_intersect(packed.data(), row, rows.words)) continue;
            for (std::size_t w = 0; w < rows.words; ++w) packed[w] |= row[w];
            ++count;
        }
        return count;
    }

    SearchStatus search(int k) {
        if (++nodes > budget) return SearchStatus::Budget;
        const std::size_t idx = first_uncovered();
        if (idx == rows.rows) return SearchStatus::Found;
        if (k == 0) return SearchStatus::NotFound;
        if (packing_bound(k) > k) return SearchStatus::NotFound;
        for (Vertex v : edges[idx]) {
            chosen_mask[static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);
            chosen.push_back(v);
            const SearchStatus st = search(k - 1);
            if (st != SearchStatus::NotFound) return st; // Found keeps the stack
            chosen.pop_back();
            chosen_mask[static_cast<std::size_t>(v) / 64] &= ~(1ull << (v % 64));
        }
        return SearchStatus::NotFound;
    }
};

} // namespace

std::optional<Edge> cover_at_most(const Hypergraph& h, int k) {
    if (k < 0) throw DomainError("cover_at_most: k must be >= 0");
    CoverSearch s(h);
    if (s.search(k) == SearchStatus::Found) {
        Edge c = s.chosen;
        std::sort(c.begin(), c.end());
        return c;
    }
    return std::nullopt;
}

Edge greedy_cover_upper(const Hypergraph& h) {
    const BitMatrix rows = BitMatrix::from_edges(h.n(), h.edges());
    std::vector<char> covered(rows.rows, 0);
    std::size_t remaining = rows.rows;
    Edge cover;
    while (remaining > 0) {
        int best_v = -1;
        std::size_t best_deg = 0;
        for (int v = 0; v < h.n(); ++v) {
            std::size_t deg = 0;
            for (std::size_t i = 0; i < rows.rows; ++i)
                if (!covered[i] && (rows.row(i)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1)
                    ++deg;
            if (deg > best_deg) {
                best_deg = deg;
                best_v = v;
            }
        }
        for (std::size_t i = 0; i < rows.rows; ++i)
            if (!covered[i] && (rows.row(i)[static_cast<std::size_t>(best_v) / 64] >> (best_v % 64)) & 1) {
                covered[i] = 1;
                --remaining;
            }
        cover.push_back(best_v);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

int greedy_packing_lower(const Hypergraph& h) {
    const BitMatrix rows = BitMatrix::from_edges(h.n(), h.edges());
    std::vector<std::uint64_t> packed(rows.words, 0);
    int count = 0;
    for (std::size_t i = 0; i < rows.rows; ++i) {
        if (masks_intersect(packed.data(), rows.row(i), rows.words)) continue;
        for (std::size_t w = 0; w < rows.words; ++w) packed[w] |= rows.row(i)[w];
        ++count;
    }
    return count;
}

CoverCertificate cover_number(const Hypergraph& h, std::uint64_t node_budget) {
    CoverCertificate cert;
    if (h.edge_count() == 0) {
        cert.optimal = true; // tau = 0 by convention
        return cert;
    }

    const Edge ub_cover = greedy_cover_upper(h);
    const int ub = static_cast<int>(ub_cover.size());
    const int lb = greedy_packing_lower(h);

    CoverSearch s(h);
    s.budget = node_budget;
    for (int k = lb; k < ub; ++k) {
        const SearchStatus st = s.search(k);
        if (st == SearchStatus::Found) {
            cert.tau = k;
            cert.cover = s.chosen;
            std::sort(cert.cover.begin(), cert.cover.end());
            cert.optimal = true; // sizes below k exhausted (k == lb is proved by the packing)
            cert.lower_bound = k;
            cert.nodes_explored = s.nodes;
            return cert;
        }
        if (st == SearchStatus::Budget) {
            cert.tau = ub;
            cert.cover = ub_cover;
            cert.optimal = false;
            cert.lower_bound = k; // all sizes < k ruled out before the budget ran dry
            cert.nodes_explored = s.nodes;
            cert.budget_exhausted = true;
            return cert;
        }
        // NotFound: size k impossible, deepen.
    }
    cert.tau = ub;
    cert.cover = ub_cover;
    cert.optimal = true;
    cert.lower_bound = ub;
    cert.nodes_explored = s.nodes;
    return cert;
}

CriticalityReport is_critical(const Hypergraph& h, std::uint64_t node_budget) {
    if (!h.uniformity())
        throw DomainError("is_critical requires a uniformity tag");
    const int r = *h.uniformity();

    CriticalityReport rep;
    rep.intersecting = is_intersecting(h);
    rep.cover = cover_number(h, node_budget);

    if (rep.cover.budget_exhausted && rep.cover.lower_bound <= r && r <= rep.cover.tau) {
        rep.decided = false;
        rep.critical = false;
        rep.detail = "undecided: tau in [" + std::to_string(rep.cover.lower_bound) + "," +
                     std::to_string(rep.cover.tau) + "], budget exhausted";
        return rep;
    }

    if (!rep.intersecting) {
        rep.critical = false;
        rep.detail = "not critical: not intersecting";
    } else if (rep.cover.tau != r) {
        rep.critical = false;
        rep.detail = "not critical: tau=" + std::to_string(rep.cover.tau) +
                     (rep.cover.tau < r ? " < " : " > ") + "r=" + std::to_string(r);
    } else {
        rep.critical = true;
        rep.detail = "critical: intersecting and tau=r=" + std::to_string(r);
    }
    return rep;
}

} // namespace crithg
