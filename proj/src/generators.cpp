#include "crithg/generators.hpp"

#include "crithg/errors.hpp"
#include "crithg/kernels.hpp"
#include "crithg/transforms.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>

namespace crithg {

std::string to_string(BaseChoice::Kind k) {
    switch (k) {
    case BaseChoice::Kind::complete: return "complete";
    case BaseChoice::Kind::projective_plane: return "projective_plane";
    case BaseChoice::Kind::augmented_projective_plane: return "augmented_projective_plane";
    }
    return "?";
}

Hypergraph complete_uniform(int m, int r, std::uint64_t edge_cap) {
    if (r < 1 || r > m) throw DomainError("complete_uniform: need 1 <= r <= m");
    const BigInt count = binomial(m, r);
    if (count > edge_cap)
        throw CapExceededError("complete_uniform(" + std::to_string(m) + "," + std::to_string(r) +
                                   ") would have " + count.str() + " edges, cap is " +
                                   std::to_string(edge_cap),
                               count.str());
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(count));
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    do {
        edges.push_back(comb);
    } while (next_combination(comb, m));
    return Hypergraph(m, std::move(edges), r);
}

Hypergraph complete_critical(int r, std::uint64_t edge_cap) {
    if (r < 2) throw DomainError("complete_critical: need r >= 2");
    return pad_isolated(complete_uniform(2 * r - 1, r, edge_cap), 2 * r);
}

namespace {

using Point = std::array<long long, 3>;

// Canonical projective representative: first nonzero coordinate is 1.
bool is_canonical(const Point& p) {
    for (long long c : p) {
        if (c == 0) continue;
        return c == 1;
    }
    return false; // all-zero is not a point
}

std::vector<Point> canonical_points(long long q) {
    std::vector<Point> pts;
    for (long long x = 0; x < q; ++x)
        for (long long y = 0; y < q; ++y)
            for (long long z = 0; z < q; ++z) {
                const Point p{x, y, z};
                if (is_canonical(p)) pts.push_back(p);
            }
    return pts;
}

} // namespace

Hypergraph projective_plane(long long q) {
    if (q == 1) {
        // Degenerate plane: 3 points, 3 lines of 2 points each.
        return complete_uniform(3, 2);
    }
    if (!is_prime(q))
        throw DomainError("projective_plane: order " + std::to_string(q) +
                          " not supported; use 1 or a prime (2, 3, 5, 7, ...)");

    const std::vector<Point> pts = canonical_points(q);
    std::vector<Edge> lines;
    lines.reserve(pts.size());
    for (const Point& line : pts) { // lines use the same canonical coordinates
        Edge e;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point& p = pts[i];
            const long long dot = line[0] * p[0] + line[1] * p[1] + line[2] * p[2];
            if (dot % q == 0) e.push_back(static_cast<int>(i));
        }
        lines.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(pts.size()), std::move(lines), static_cast<int>(q) + 1);
}

std::vector<BaseChoice> base_candidates(int r, std::uint64_t edge_cap) {
    if (r < 2) throw DomainError("base_candidates: need r >= 2");
    std::vector<BaseChoice> out;

    auto plane_cost = [](long long q) { return q * q + q + 1; };

    // Plane of order r-1 (prime, or the degenerate q = 1).
    if (r - 1 == 1 || is_prime(r - 1)) {
        BaseChoice c;
        c.kind = BaseChoice::Kind::projective_plane;
        c.q = r - 1;
        c.uniformity = r;
        c.vertices = static_cast<int>(plane_cost(r - 1));
        c.predicted_edges = plane_cost(r - 1);
        out.push_back(std::move(c));
    }

    // Largest prime q' with q'+1 < r, raised to uniformity r step by step.
    if (const long long qp = prev_prime(r - 1); qp >= 2) {
        BaseChoice c;
        c.kind = BaseChoice::Kind::augmented_projective_plane;
        c.q = qp;
        c.uniformity = r;
        c.augment_steps = r - static_cast<int>(qp) - 1;
        BigInt e = plane_cost(qp);
        long long v = plane_cost(qp);
        for (int u = static_cast<int>(qp) + 1; u < r; ++u) {
            e = e * (u + 1) + 1;
            v += u + 1;
        }
        c.vertices = static_cast<int>(v);
        c.predicted_edges = std::move(e);
        out.push_back(std::move(c));
    }

    // Complete K_{2r-1}^{(r)} (trimmed form: no padding vertex).
    {
        BaseChoice c;
        c.kind = BaseChoice::Kind::complete;
        c.uniformity = r;
        c.vertices = 2 * r - 1;
        c.predicted_edges = binomial(2 * r - 1, r);
        out.push_back(std::move(c));
    }

    std::erase_if(out, [&](const BaseChoice& c) { return c.predicted_edges > edge_cap; });
    std::stable_sort(out.begin(), out.end(), [](const BaseChoice& a, const BaseChoice& b) {
        return std::tie(a.predicted_edges, a.vertices) < std::tie(b.predicted_edges, b.vertices);
    });
    return out;
}

Hypergraph materialize_base(const BaseChoice& choice, std::uint64_t edge_cap) {
    Hypergraph h = [&] {
        switch (choice.kind) {
        case BaseChoice::Kind::complete:
            return complete_uniform(2 * choice.uniformity - 1, choice.uniformity, edge_cap);
        case BaseChoice::Kind::projective_plane:
            return projective_plane(choice.q);
        case BaseChoice::Kind::augmented_projective_plane: {
            Hypergraph p = projective_plane(choice.q);
            for (int s = 0; s < choice.augment_steps; ++s) p = add_one(p, edge_cap);
            return p;
        }
        }
        throw DomainError("materialize_base: unknown kind");
    }();
    if (static_cast<int>(h.edge_count()) != choice.predicted_edges || h.n() != choice.vertices)
        throw DomainError("materialize_base: realized counts diverge from BaseChoice");
    return h;
}

std::pair<Hypergraph, BaseChoice> base_critical(int r, std::uint64_t edge_cap) {
    const std::vector<BaseChoice> cands = base_candidates(r, edge_cap);
    if (cands.empty()) {
        const BigInt cheapest =
            base_candidates(r, std::numeric_limits<std::uint64_t>::max()).front().predicted_edges;
        throw CapExceededError("no r=" + std::to_string(r) + " base fits the edge cap " +
                                   std::to_string(edge_cap) + "; cheapest candidate needs " +
                                   cheapest.str() + " edges",
                               cheapest.str());
    }
    return {materialize_base(cands.front(), edge_cap), cands.front()};
}

} // namespace crithg
