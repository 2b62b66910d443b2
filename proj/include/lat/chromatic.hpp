#pragma once

#include "lat/error.hpp"
#include "lat/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lat {

inline constexpr std::size_t kMaxChromaticOrder = 16;

namespace detail {

// Adjacency as bitmasks; p <= 16 fits comfortably.
inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    return adj;
}

inline std::size_t max_clique(const std::vector<std::uint32_t>& adj) {
    const std::size_t n = adj.size();
    std::size_t best = n > 0 ? 1 : 0;
    for (std::uint32_t set = 1; set < (1u << n); ++set) {
        const auto size = static_cast<std::size_t>(std::popcount(set));
        if (size <= best) continue;
        bool clique = true;
        for (std::uint32_t rest = set; rest && clique; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            clique = (set & ~(1u << v) & ~adj[v]) == 0;
        }
        if (clique) best = size;
    }
    return best;
}

// DSATUR greedy; returns the number of colors it used.
inline std::size_t dsatur_greedy(const std::vector<std::uint32_t>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> color(n, -1);
    std::vector<std::uint32_t> seen(n, 0);  // colors present in the neighborhood
    std::size_t used = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (pick == n) { pick = v; continue; }
            const int sv = std::popcount(seen[v]), sp = std::popcount(seen[pick]);
            if (sv > sp || (sv == sp && std::popcount(adj[v]) > std::popcount(adj[pick]))) pick = v;
        }
        const int c = std::countr_one(seen[pick]);
        color[pick] = c;
        used = std::max(used, static_cast<std::size_t>(c) + 1);
        for (std::uint32_t nb = adj[pick]; nb; nb &= nb - 1) seen[std::countr_zero(nb)] |= 1u << c;
    }
    return used;
}

class KColoring {
public:
    KColoring(const std::vector<std::uint32_t>& adj, std::size_t k) : adj_(adj), k_(k), color_(adj.size(), -1) {}

    bool run() { return extend(0); }

private:
    bool extend(std::size_t colored) {
        const std::size_t n = adj_.size();
        if (colored == n) return true;
        // most constrained uncolored vertex
        std::size_t pick = n;
        int best_sat = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (color_[v] >= 0) continue;
            const int sat = std::popcount(forbidden(v));
            if (sat > best_sat) { best_sat = sat; pick = v; }
        }
        const std::uint32_t bad = forbidden(pick);
        // colors beyond the highest in use are interchangeable: try only one fresh color
        int highest = -1;
        for (int c : color_) highest = std::max(highest, c);
        for (int c = 0; c < static_cast<int>(k_) && c <= highest + 1; ++c) {
            if (bad & (1u << c)) continue;
            color_[pick] = c;
            if (extend(colored + 1)) return true;
            color_[pick] = -1;
        }
        return false;
    }

    std::uint32_t forbidden(std::size_t v) const {
        std::uint32_t out = 0;
        for (std::uint32_t nb = adj_[v]; nb; nb &= nb - 1) {
            const int c = color_[std::countr_zero(nb)];
            if (c >= 0) out |= 1u << c;
        }
        return out;
    }

    const std::vector<std::uint32_t>& adj_;
    std::size_t k_;
    std::vector<int> color_;
};

} // namespace detail

/// Exact chromatic number (0 for the empty-order graph). Clique size bounds
/// from below, DSATUR from above, and backtracking settles the gap.
inline std::size_t chromatic_number(const Graph& g) {
    if (g.order() > kMaxChromaticOrder) {
        throw RefusalError("chromatic_number supports at most " + std::to_string(kMaxChromaticOrder) +
                           " vertices, got " + std::to_string(g.order()));
    }
    if (g.order() == 0) return 0;
    const auto adj = detail::adjacency_masks(g);
    const std::size_t lower = detail::max_clique(adj);
    const std::size_t upper = detail::dsatur_greedy(adj);
    for (std::size_t k = lower; k < upper; ++k) {
        if (detail::KColoring(adj, k).run()) return k;
    }
    return upper;
}

// max(chi(G), number of isolated vertices)
inline std::size_t chi_lat_lower_bound(const Graph& g) {
    return std::max(chromatic_number(g), g.isolated_count());
}

} // namespace lat
