#pragma once

#include "lat/error.hpp"
#include "lat/families.hpp"
#include "lat/graph.hpp"
#include "lat/labeling.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lat {

struct LabeledGraph {
    Graph graph;
    TotalLabeling labeling;
};

/// Reads labels in path order v1, e1, v2, e2, ..., vn onto the canonical
/// P_n (vertex i, edge i = {i, i+1}).
inline TotalLabeling from_interleaved_path(std::span<const Label> sequence) {
    if (sequence.size() % 2 == 0) throw ParameterError("interleaved path sequence must have odd length 2n-1");
    TotalLabeling f;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        (i % 2 == 0 ? f.vertex_labels : f.edge_labels).push_back(sequence[i]);
    }
    return f;
}

inline std::vector<Label> to_interleaved_path(const TotalLabeling& f) {
    std::vector<Label> out;
    for (std::size_t i = 0; i < f.vertex_labels.size(); ++i) {
        out.push_back(f.vertex_labels[i]);
        if (i < f.edge_labels.size()) out.push_back(f.edge_labels[i]);
    }
    return out;
}

// K_2 + O_n with f(u1)=1, f(u2)=2, f(u1u2)=3, f(v_i)=i+3.
inline LabeledGraph construct_k2_plus_empty(std::size_t n) {
    if (n < 1) throw ParameterError("parameter out of range: k2-plus-empty construction requires n >= 1");
    LabeledGraph out{generate(family::K2PlusEmpty{n}), {}};
    out.labeling.vertex_labels = {1, 2};
    for (std::size_t i = 1; i <= n; ++i) out.labeling.vertex_labels.push_back(static_cast<Label>(i + 3));
    out.labeling.edge_labels = {3};
    return out;
}

inline std::span<const Label> small_odd_path_sequence(std::size_t n) {
    static constexpr std::array<Label, 5> p3{1, 5, 3, 4, 2};
    static constexpr std::array<Label, 9> p5{1, 9, 7, 3, 2, 5, 8, 6, 4};
    static constexpr std::array<Label, 13> p7{13, 6, 4, 10, 1, 8, 9, 3, 5, 11, 2, 7, 12};
    switch (n) {
    case 3: return p3;
    case 5: return p5;
    case 7: return p7;
    default:
        throw ParameterError("no closed-form two-weight labeling for P_" + std::to_string(n) +
                             " (only n = 3, 5, 7); use the solver instead");
    }
}

inline LabeledGraph construct_small_odd_path(std::size_t n) {
    const auto seq = small_odd_path_sequence(n);
    return {generate(family::Path{n}), from_interleaved_path(seq)};
}

struct PathFromCycle {
    Graph path;
    TotalLabeling labeling;
    std::vector<std::size_t> cycle_vertex;  // path vertex i came from cycle vertex cycle_vertex[i]
};

namespace detail {

inline bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order()) return false;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    // 2-regular with p edges: connected iff the walk from 0 visits everything.
    std::size_t prev = 0, cur = g.neighbors(0)[0], steps = 1;
    while (cur != 0) {
        const auto nb = g.neighbors(cur);
        const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++steps;
    }
    return steps == g.order();
}

} // namespace detail

/// Cuts a cycle at an edge labelled 1 and lowers every remaining label by
/// one. Each vertex weight drops by exactly 3, so validity and the distinct
/// count carry over. The path starts at the cut edge's higher endpoint.
inline PathFromCycle path_from_cycle(const Graph& cycle, const TotalLabeling& f, EdgeId doomed) {
    if (!detail::is_cycle_graph(cycle)) throw PreconditionError("path_from_cycle needs a cycle graph C_n");
    if (doomed.value >= cycle.size()) throw PreconditionError("edge id " + std::to_string(doomed.value) + " out of range");
    const auto report = verify_total(cycle, f);
    if (!report.valid()) throw PreconditionError("input is not a local antimagic total labeling of the cycle");
    if (f.edge_labels[doomed.value] != 1) {
        throw PreconditionError("doomed edge carries label " + std::to_string(f.edge_labels[doomed.value]) +
                                ", expected 1");
    }

    const auto [low, high] = cycle.edge(doomed);
    const std::size_t n = cycle.order();
    PathFromCycle out;
    out.cycle_vertex.reserve(n);
    std::size_t prev = low, cur = high;
    for (std::size_t i = 0; i < n; ++i) {
        out.cycle_vertex.push_back(cur);
        const auto nb = cycle.neighbors(cur);
        const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }

    out.path = generate(family::Path{n});
    for (std::size_t i = 0; i < n; ++i) out.labeling.vertex_labels.push_back(f.vertex_labels[out.cycle_vertex[i]] - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto e = *cycle.find_edge(out.cycle_vertex[i], out.cycle_vertex[i + 1]);
        out.labeling.edge_labels.push_back(f.edge_labels[e] - 1);
    }
    return out;
}

} // namespace lat
