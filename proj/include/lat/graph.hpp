#pragma once

#include "lat/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lat {

struct VertexId {
    std::size_t value = 0;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
    std::size_t value = 0;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Undirected edge with u < v once it lives inside a Graph.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with a canonical edge order.
///
/// Endpoints are stored ascending and the edge list is sorted
/// lexicographically, so EdgeId i always names the same edge for a given
/// vertex count and edge set. Instances are immutable after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {})
        : order_(vertex_count), edges_(std::move(edges)) {
        for (auto& e : edges_) {
            if (e.u == e.v) {
                throw ValidationError("self-loop at vertex " + std::to_string(e.u));
            }
            if (e.u >= order_ || e.v >= order_) {
                throw ValidationError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                      "} has an endpoint >= vertex count " + std::to_string(order_));
            }
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (edges_[i] == edges_[i - 1]) {
                throw ValidationError("duplicate edge {" + std::to_string(edges_[i].u) + "," +
                                      std::to_string(edges_[i].v) + "}");
            }
        }
        neighbors_.assign(order_, {});
        incident_.assign(order_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto [u, v] = edges_[i];
            neighbors_[u].push_back(v);
            neighbors_[v].push_back(u);
            incident_[u].push_back(i);
            incident_[v].push_back(i);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    }

    std::size_t order() const noexcept { return order_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }
    const Edge& edge(EdgeId e) const { return edges_.at(e.value); }

    std::span<const std::size_t> neighbors(std::size_t v) const { return neighbors_.at(v); }
    std::span<const std::size_t> incident_edges(std::size_t v) const { return incident_.at(v); }
    std::size_t degree(std::size_t v) const { return neighbors_.at(v).size(); }

    std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        const Edge key{a, b};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    bool adjacent(std::size_t a, std::size_t b) const { return find_edge(a, b).has_value(); }

    std::size_t isolated_count() const {
        return static_cast<std::size_t>(
            std::count_if(neighbors_.begin(), neighbors_.end(), [](const auto& nb) { return nb.empty(); }));
    }

    // True iff v is adjacent to every other vertex.
    bool is_universal(std::size_t v) const { return degree(v) + 1 == order_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    std::size_t order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<std::vector<std::size_t>> incident_;
};

// G's vertices keep 0..p_G-1, H's move to p_G..p_G+p_H-1, plus every cross edge.
inline Graph join(const Graph& g, const Graph& h) {
    const std::size_t off = g.order();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.reserve(g.size() + h.size() + g.order() * h.order());
    for (const auto& e : h.edges()) edges.push_back({e.u + off, e.v + off});
    for (std::size_t a = 0; a < g.order(); ++a) {
        for (std::size_t b = 0; b < h.order(); ++b) edges.push_back({a, b + off});
    }
    return Graph(g.order() + h.order(), std::move(edges));
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const std::size_t off = g.order();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (const auto& e : h.edges()) edges.push_back({e.u + off, e.v + off});
    return Graph(g.order() + h.order(), std::move(edges));
}

// Subgraph induced by `keep` (ascending cone vertex ids); vertex i of the
// result is keep[i].
inline Graph induced_subgraph(const Graph& g, std::span<const std::size_t> keep) {
    std::vector<std::size_t> index(g.order(), g.order());
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (index[e.u] < g.order() && index[e.v] < g.order()) edges.push_back({index[e.u], index[e.v]});
    }
    return Graph(keep.size(), std::move(edges));
}

} // namespace lat
