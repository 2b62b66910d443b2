#pragma once

// Reference implementations used only by the tests. They work from a raw
// (p, edge pairs) description and an adjacency matrix, and share no code
// with the library's weight, verification or search routines.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct RawGraph {
    std::size_t p = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // any order, u != v

    std::vector<std::vector<int>> matrix() const {
        std::vector<std::vector<int>> adj(p, std::vector<int>(p, 0));
        for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
        return adj;
    }
};

template <class G>
RawGraph raw(const G& g) {
    RawGraph r{g.order(), {}};
    for (const auto& e : g.edges()) r.edges.emplace_back(e.u, e.v);
    return r;
}

// Weight of each vertex: own label (if any) plus every incident edge label,
// found by scanning the whole edge list.
inline std::vector<long long> weights(const RawGraph& g, const std::vector<long long>& vertex_labels,
                                      const std::vector<long long>& edge_labels) {
    std::vector<long long> w(g.p, 0);
    for (std::size_t v = 0; v < g.p; ++v) {
        if (!vertex_labels.empty()) w[v] = vertex_labels[v];
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            if (g.edges[e].first == v || g.edges[e].second == v) w[v] += edge_labels[e];
        }
    }
    return w;
}

inline bool proper(const RawGraph& g, const std::vector<long long>& w) {
    const auto adj = g.matrix();
    for (std::size_t a = 0; a < g.p; ++a)
        for (std::size_t b = a + 1; b < g.p; ++b)
            if (adj[a][b] && w[a] == w[b]) return false;
    return true;
}

inline std::size_t distinct(const std::vector<long long>& w) { return std::set<long long>(w.begin(), w.end()).size(); }

// Minimum distinct weights over all bijections, or nullopt when no labeling
// is local antimagic. Vertex labels are the first p entries of each
// permutation when `total` is set.
inline std::optional<std::size_t> min_distinct(const RawGraph& g, bool total) {
    const std::size_t n = (total ? g.p : 0) + g.edges.size();
    std::vector<long long> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::optional<std::size_t> best;
    do {
        std::vector<long long> vl, el;
        if (total) vl.assign(perm.begin(), perm.begin() + static_cast<long>(g.p));
        el.assign(perm.end() - static_cast<long>(g.edges.size()), perm.end());
        const auto w = weights(g, vl, el);
        if (!proper(g, w)) continue;
        const std::size_t d = distinct(w);
        if (!best || d < *best) best = d;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool connected(const RawGraph& g) {
    if (g.p == 0) return true;
    const auto adj = g.matrix();
    std::vector<int> seen(g.p, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < g.p; ++u) {
            if (adj[v][u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s != 0; });
}

// Every labelled graph on p vertices, as a list of edge subsets of K_p.
inline std::vector<RawGraph> all_graphs(std::size_t p) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b) pairs.emplace_back(a, b);
    std::vector<RawGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        RawGraph g{p, {}};
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) g.edges.push_back(pairs[i]);
        out.push_back(std::move(g));
    }
    return out;
}

inline bool is_automorphism(const RawGraph& g, const std::vector<std::size_t>& perm) {
    const auto adj = g.matrix();
    for (std::size_t a = 0; a < g.p; ++a)
        for (std::size_t b = 0; b < g.p; ++b)
            if (adj[a][b] != adj[perm[a]][perm[b]]) return false;
    return true;
}

inline RawGraph random_graph(std::mt19937_64& rng, std::size_t max_p, double density) {
    std::uniform_int_distribution<std::size_t> order(1, max_p);
    std::bernoulli_distribution coin(density);
    RawGraph g{order(rng), {}};
    for (std::size_t a = 0; a < g.p; ++a)
        for (std::size_t b = a + 1; b < g.p; ++b)
            if (coin(rng)) g.edges.emplace_back(a, b);
    return g;
}

inline std::vector<long long> shuffled_labels(std::mt19937_64& rng, std::size_t n) {
    std::vector<long long> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

} // namespace oracle
