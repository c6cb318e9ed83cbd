#include "crithg/hypergraph.hpp"

#include "crithg/errors.hpp"
#include "crithg/kernels.hpp"
#include "crithg/numeric.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace crithg {

Hypergraph::Hypergraph(int n, std::vector<Edge> edges, std::optional<int> uniformity)
    : n_(n), r_(uniformity), edges_(std::move(edges)) {
    if (n_ < 0) throw DomainError("vertex count must be non-negative");
    if (r_ && *r_ < 1) throw DomainError("uniformity tag must be >= 1");

    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        const std::string at = "edge " + std::to_string(i);
        if (e.empty()) throw DomainError(at + " is empty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw DomainError(at + " has a repeated vertex");
        if (e.front() < 0 || e.back() >= n_)
            throw DomainError(at + " has a vertex outside 0.." + std::to_string(n_ - 1));
        if (r_ && static_cast<int>(e.size()) != *r_)
            throw DomainError(at + " has " + std::to_string(e.size()) +
                              " vertices, expected uniformity " + std::to_string(*r_));
        if (!seen.insert(e).second) throw DomainError("duplicate edge at index " + std::to_string(i));
    }
    std::sort(edges_.begin(), edges_.end());
}

bool is_uniform(const Hypergraph& h, int r) {
    for (const Edge& e : h.edges())
        if (static_cast<int>(e.size()) != r) return false;
    return true;
}

bool is_intersecting(const Hypergraph& h) {
    const BitMatrix m = BitMatrix::from_edges(h.n(), h.edges());
    return !first_disjoint_pair(m).has_value();
}

bool has_covering_property(const Hypergraph& h, int k, std::uint64_t subset_cap) {
    if (k < 0 || k > h.n())
        throw DomainError("covering property: k must be in 0..n");
    const BigInt count = binomial(h.n(), k);
    if (count > subset_cap)
        throw CapExceededError("covering property check needs " + count.str() +
                                   " subsets, cap is " + std::to_string(subset_cap),
                               count.str());
    // Every k-set contains an edge  <=>  no (n-k)-set meets all edges.
    const BitMatrix m = BitMatrix::from_edges(h.n(), h.edges());
    return !find_covering_subset(m, h.n() - k).has_value();
}

Hypergraph pad_isolated(const Hypergraph& h, int n_target) {
    if (n_target < h.n()) throw DomainError("cannot shrink: target vertex count below current");
    return Hypergraph(n_target, h.edges(), h.uniformity());
}

Hypergraph remove_isolated(const Hypergraph& h) {
    std::vector<char> used(h.n(), 0);
    for (const Edge& e : h.edges())
        for (Vertex v : e) used[v] = 1;
    std::vector<int> relabel(h.n(), -1);
    int next = 0;
    for (int v = 0; v < h.n(); ++v)
        if (used[v]) relabel[v] = next++;
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (const Edge& e : h.edges()) {
        Edge out;
        out.reserve(e.size());
        for (Vertex v : e) out.push_back(relabel[v]);
        edges.push_back(std::move(out));
    }
    return Hypergraph(next, std::move(edges), h.uniformity());
}

HypergraphStats compute_stats(const Hypergraph& h) {
    HypergraphStats s;
    s.n = h.n();
    s.r = h.uniformity();
    s.edge_count = h.edge_count();
    std::vector<char> used(h.n(), 0);
    for (const Edge& e : h.edges())
        for (Vertex v : e) used[v] = 1;
    s.isolated_vertex_count = h.n() - static_cast<int>(std::count(used.begin(), used.end(), 1));
    s.intersecting = is_intersecting(h);
    return s;
}

} // namespace crithg
