#pragma once

#include "lat/error.hpp"
#include "lat/graph.hpp"
#include "lat/labeling.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

// Labeling transfers between a graph G and its cones K_1 v G / G v O_2.

namespace lat {

struct ConeToTotal {
    Graph graph;
    TotalLabeling labeling;
    std::vector<std::size_t> cone_vertex;  // vertex i of `graph` is cone vertex cone_vertex[i]
};

struct TotalToCone {
    Graph cone;  // join(G, O_1): G keeps its indices, apex last
    EdgeLabeling labeling;
    VertexId apex;
    Weight apex_weight = 0;
};

struct DoubleConeCollapse {
    Graph graph;  // join(G, O_1) with the kept apex last
    TotalLabeling labeling;
    VertexId kept_apex;      // in the input double cone
    VertexId consumed_apex;  // in the input double cone; its edge labels became vertex labels
    std::vector<std::size_t> source_vertex;  // output vertex i came from input vertex source_vertex[i]
};

namespace detail {

inline std::vector<std::size_t> all_but(std::size_t n, std::initializer_list<std::size_t> skip) {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < n; ++v) {
        if (std::find(skip.begin(), skip.end(), v) == skip.end()) keep.push_back(v);
    }
    return keep;
}

inline void require_valid_edge_labeling(const Graph& g, const EdgeLabeling& lab) {
    const auto report = verify_edge(g, lab);
    if (report.valid()) return;
    std::string why = report.problems.empty() ? "adjacent vertices share a weight" : report.problems.front();
    throw PreconditionError("edge labeling is not local antimagic: " + why);
}

} // namespace detail

/// Drops the apex of K_1 v G. Each remaining vertex takes its apex edge's
/// label and every other edge keeps its label, so w(v) = g+(v) exactly.
inline ConeToTotal cone_to_total(const Graph& cone, const EdgeLabeling& g, VertexId apex) {
    const std::size_t u = apex.value;
    if (u >= cone.order()) throw StructureError("apex " + std::to_string(u) + " is not a vertex");
    if (!cone.is_universal(u)) {
        throw StructureError("apex " + std::to_string(u) + " has degree " + std::to_string(cone.degree(u)) +
                             ", not adjacent to all " + std::to_string(cone.order() - 1) + " other vertices");
    }
    detail::require_valid_edge_labeling(cone, g);

    ConeToTotal out;
    out.cone_vertex = detail::all_but(cone.order(), {u});
    out.graph = induced_subgraph(cone, out.cone_vertex);
    for (std::size_t v : out.cone_vertex) out.labeling.vertex_labels.push_back(g.edge_labels[*cone.find_edge(u, v)]);
    for (const auto& e : out.graph.edges()) {
        out.labeling.edge_labels.push_back(
            g.edge_labels[*cone.find_edge(out.cone_vertex[e.u], out.cone_vertex[e.v])]);
    }
    return out;
}

/// Cones a total labeling: apex edges take the vertex labels. Requires the
/// apex sum S = sum f(v) to differ from every vertex weight; no repair is
/// attempted when it does not.
inline TotalToCone total_to_cone(const Graph& g, const TotalLabeling& f) {
    const auto report = verify_total(g, f);
    if (!report.valid()) throw PreconditionError("input is not a local antimagic total labeling");
    const Weight s = std::accumulate(f.vertex_labels.begin(), f.vertex_labels.end(), Weight{0});
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (report.profile.weights[v] == s) {
            throw PreconditionError("apex sum " + std::to_string(s) + " equals w(v" + std::to_string(v) + ")", v);
        }
    }

    TotalToCone out;
    out.cone = join(g, Graph(1));
    out.apex = VertexId{g.order()};
    out.apex_weight = s;
    out.labeling.edge_labels.reserve(out.cone.size());
    for (const auto& e : out.cone.edges()) {
        out.labeling.edge_labels.push_back(e.v == g.order() ? f.vertex_labels[e.u] : f.edge_labels[*g.find_edge(e.u, e.v)]);
    }
    return out;
}

/// Collapses G v O_2 onto G v K_1: the kept apex u1 gets label 2p+q+1 and
/// every v_i takes the label of its edge to the consumed apex u2.
/// Precondition: 2p+q+1 + g+(u1) differs from every g+(v_i).
inline DoubleConeCollapse double_cone_collapse(const Graph& cone, const EdgeLabeling& g, std::pair<VertexId, VertexId> apexes) {
    const std::size_t u1 = apexes.first.value, u2 = apexes.second.value;
    const std::size_t n = cone.order();
    if (u1 >= n || u2 >= n || u1 == u2) throw StructureError("apexes must be two distinct vertices");
    if (cone.adjacent(u1, u2)) throw StructureError("apexes of G v O_2 must be non-adjacent");
    for (std::size_t a : {u1, u2}) {
        if (cone.degree(a) + 2 != n) {
            throw StructureError("apex " + std::to_string(a) + " is not adjacent to every base vertex");
        }
    }
    const std::size_t p = n - 2;
    const std::size_t q = cone.size() - 2 * p;
    if (p < 2 || q < 1) throw StructureError("base graph needs order >= 2 and size >= 1");
    detail::require_valid_edge_labeling(cone, g);

    const auto plus = detail::raw_edge_weights(cone, g);
    const Label top = static_cast<Label>(2 * p + q + 1);
    const Weight apex_weight = top + plus[u1];

    DoubleConeCollapse out;
    out.kept_apex = VertexId{u1};
    out.consumed_apex = VertexId{u2};
    auto base = detail::all_but(n, {u1, u2});
    for (std::size_t v : base) {
        if (plus[v] == apex_weight) {
            throw PreconditionError("2p+q+1+g+(u1) = " + std::to_string(apex_weight) + " equals g+(v" +
                                        std::to_string(v) + ")",
                                    v);
        }
    }

    const Graph base_graph = induced_subgraph(cone, base);
    out.graph = join(base_graph, Graph(1));
    out.source_vertex = base;
    out.source_vertex.push_back(u1);
    for (std::size_t v : base) out.labeling.vertex_labels.push_back(g.edge_labels[*cone.find_edge(u2, v)]);
    out.labeling.vertex_labels.push_back(top);
    for (const auto& e : out.graph.edges()) {
        const std::size_t a = out.source_vertex[e.u], b = out.source_vertex[e.v];
        out.labeling.edge_labels.push_back(g.edge_labels[*cone.find_edge(a, b)]);
    }
    return out;
}

} // namespace lat
