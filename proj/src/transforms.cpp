#include "crithg/transforms.hpp"

#include "crithg/cover.hpp"
#include "crithg/errors.hpp"

#include <string>
#include <utility>

namespace crithg {

namespace {

int require_uniformity(const Hypergraph& h, const char* who) {
    if (!h.uniformity())
        throw DomainError(std::string(who) + " requires uniform inputs (uniformity tag missing)");
    return *h.uniformity();
}

} // namespace

BigInt wreath_edge_count(const Hypergraph& h1, const Hypergraph& h2) {
    const int r1 = require_uniformity(h1, "wreath product");
    require_uniformity(h2, "wreath product");
    BigInt count = h1.edge_count();
    const BigInt m2 = h2.edge_count();
    for (int i = 0; i < r1; ++i) count *= m2;
    return count;
}

Hypergraph wreath_product(const Hypergraph& h1, const Hypergraph& h2, std::uint64_t edge_cap) {
    const int r1 = require_uniformity(h1, "wreath product");
    const int r2 = require_uniformity(h2, "wreath product");
    const BigInt count = wreath_edge_count(h1, h2);
    if (count > edge_cap)
        throw CapExceededError("wreath product would have exactly " + count.str() +
                                   " edges, cap is " + std::to_string(edge_cap),
                               count.str());

    const int n2 = h2.n();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(count));
    WreathEdgeStream stream(h1, h2);
    while (auto e = stream.next()) edges.push_back(std::move(*e));
    return Hypergraph(h1.n() * n2, std::move(edges), r1 * r2);
}

WreathEdgeStream::WreathEdgeStream(Hypergraph h1, Hypergraph h2)
    : h1_(std::move(h1)), h2_(std::move(h2)), total_(wreath_edge_count(h1_, h2_)) {
    done_ = h1_.edge_count() == 0 || h2_.edge_count() == 0;
    if (!done_) choice_.assign(h1_.edges().front().size(), 0);
}

std::optional<Edge> WreathEdgeStream::next() {
    if (done_) return std::nullopt;

    const Edge& outer = h1_.edges()[outer_];
    Edge e;
    e.reserve(choice_.size() * h2_.edges().front().size());
    for (std::size_t b = 0; b < outer.size(); ++b) {
        const int block = outer[b];
        for (Vertex u : h2_.edges()[choice_[b]]) e.push_back(block * h2_.n() + u);
    }
    // Blocks are listed in ascending order and each block's vertices are
    // sorted, so e is already sorted.

    // Advance the mixed-radix inner counter, rightmost digit fastest.
    std::size_t d = choice_.size();
    while (d > 0) {
        --d;
        if (++choice_[d] < h2_.edge_count()) break;
        choice_[d] = 0;
        if (d == 0) {
            if (++outer_ >= h1_.edge_count()) done_ = true;
        }
    }
    return e;
}

Hypergraph add_one(const Hypergraph& h, std::uint64_t edge_cap, bool paranoid,
                   std::uint64_t node_budget) {
    const int r = require_uniformity(h, "add_one");
    if (paranoid) {
        const CriticalityReport rep = is_critical(h, node_budget);
        if (!rep.decided)
            throw DomainError("add_one --paranoid: criticality check ran out of budget");
        if (!rep.critical) throw DomainError("add_one --paranoid: input is not critical: " + rep.detail);
    }

    const BigInt count = BigInt(h.edge_count()) * (r + 1) + 1;
    if (count > edge_cap)
        throw CapExceededError("add_one would produce " + count.str() + " edges, cap is " +
                                   std::to_string(edge_cap),
                               count.str());

    const int n = h.n();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(count));
    for (const Edge& e : h.edges())
        for (int v = n; v <= n + r; ++v) {
            Edge out = e;
            out.push_back(v); // fresh vertices sort after all old ones
            edges.push_back(std::move(out));
        }
    Edge fresh(r + 1);
    for (int i = 0; i <= r; ++i) fresh[i] = n + i;
    edges.push_back(std::move(fresh));
    return Hypergraph(n + r + 1, std::move(edges), r + 1);
}

} // namespace crithg
