#pragma once

#include "lat/error.hpp"
#include "lat/graph.hpp"
#include "lat/labeling.hpp"
#include "lat/solver.hpp"
#include "lat/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lat {

using Json = nlohmann::ordered_json;

/// Self-contained record of a labeling: the graph, the labels, and the
/// claims (weights, distinct count, validity) a third party can re-derive.
struct Certificate {
    Graph graph;
    SearchMode mode = SearchMode::Total;
    std::vector<Label> vertex_labels;  // empty in edge mode
    std::vector<Label> edge_labels;
    std::vector<Weight> weights;
    std::size_t distinct_count = 0;
    bool valid = false;
    Json provenance = Json::object();
    std::optional<std::string> citation;
    Json extra = Json::object();  // unrecognised top-level fields, kept verbatim

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline Json make_provenance(std::string source) {
    Json p = Json::object();
    p["source"] = std::move(source);
    p["tool_version"] = kToolVersion;
    return p;
}

inline Certificate make_certificate(const Graph& g, const AnyLabeling& lab, Json provenance) {
    Certificate c;
    c.graph = g;
    const auto report = verify_any(g, lab);
    if (const auto* f = std::get_if<TotalLabeling>(&lab)) {
        c.mode = SearchMode::Total;
        c.vertex_labels = f->vertex_labels;
        c.edge_labels = f->edge_labels;
    } else {
        c.mode = SearchMode::EdgeOnly;
        c.edge_labels = std::get<EdgeLabeling>(lab).edge_labels;
    }
    c.weights = report.profile.weights;
    c.distinct_count = report.profile.distinct_count;
    c.valid = report.valid();
    c.provenance = std::move(provenance);
    return c;
}

inline AnyLabeling labeling_of(const Certificate& c) {
    if (c.mode == SearchMode::Total) return TotalLabeling{c.vertex_labels, c.edge_labels};
    return EdgeLabeling{c.edge_labels};
}

inline VerifyReport reverify(const Certificate& c) { return verify_any(c.graph, labeling_of(c)); }

inline Json to_json(const Certificate& c) {
    Json j = Json::object();
    Json edges = Json::array();
    for (const auto& e : c.graph.edges()) edges.push_back({e.u, e.v});
    j["graph"] = {{"p", c.graph.order()}, {"edges", std::move(edges)}};
    j["mode"] = to_string(c.mode);
    j["labels"] = {{"vertex_labels", c.vertex_labels}, {"edge_labels", c.edge_labels}};
    j["weights"] = c.weights;
    j["distinct_count"] = c.distinct_count;
    j["valid"] = c.valid;
    j["provenance"] = c.provenance;
    if (c.citation) j["citation"] = *c.citation;
    for (const auto& [key, value] : c.extra.items()) j[key] = value;
    return j;
}

namespace detail {

// Arrays of scalars, or of non-empty scalar arrays, print on one line.
inline bool flat(const Json& j) {
    if (!j.is_array()) return j.is_primitive();
    return std::all_of(j.begin(), j.end(), [](const Json& x) {
        return x.is_primitive() || (x.is_array() && !x.empty() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); }));
    });
}

inline std::string one_line(const Json& j) {
    if (!j.is_array()) return j.dump();
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + one_line(j[i]);
    return out + "]";
}

inline void pretty(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (flat(j) || j.empty()) {
        out += one_line(j);
        return;
    }
    const bool obj = j.is_object();
    out += obj ? "{\n" : "[\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
        out += pad + "  ";
        if (obj) out += Json(key).dump() + ": ";
        pretty(value, out, depth + 1);
        out += ++i < j.size() ? ",\n" : "\n";
    }
    out += pad + (obj ? "}" : "]");
}

} // namespace detail

/// Indented JSON with scalar arrays (labels, weights, edge pairs) kept on one line.
inline std::string pretty_json(const Json& j) {
    std::string out;
    detail::pretty(j, out, 0);
    return out + "\n";
}

inline std::string write_certificate(const Certificate& c) { return pretty_json(to_json(c)); }

namespace detail {

inline const Json& field(const Json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) throw SchemaError(path.empty() ? key : path + "." + key, "missing required field");
    return obj.at(key);
}

inline std::size_t as_count(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw SchemaError(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline std::vector<std::int64_t> as_int_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected an integer");
        out.push_back(j[i].get<std::int64_t>());
    }
    return out;
}

} // namespace detail

inline Certificate certificate_from_json(const Json& j) {
    using detail::field;
    if (!j.is_object()) throw SchemaError("$", "certificate must be a JSON object");
    Certificate c;

    const auto& graph = field(j, "", "graph");
    if (!graph.is_object()) throw SchemaError("graph", "expected an object");
    const std::size_t p = detail::as_count(field(graph, "graph", "p"), "graph.p");
    const auto& edges_json = field(graph, "graph", "edges");
    if (!edges_json.is_array()) throw SchemaError("graph.edges", "expected an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const std::string path = "graph.edges[" + std::to_string(i) + "]";
        const auto pair = detail::as_int_array(edges_json[i], path);
        if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0) throw SchemaError(path, "expected [u, v] with u, v >= 0");
        Edge e{static_cast<std::size_t>(pair[0]), static_cast<std::size_t>(pair[1])};
        if (e.u >= e.v || (!edges.empty() && !(edges.back() < e))) {
            throw SchemaError(path, "edges must be listed in canonical order (u < v, lexicographic)");
        }
        edges.push_back(e);
    }
    try {
        c.graph = Graph(p, std::move(edges));
    } catch (const ValidationError& e) {
        throw SchemaError("graph.edges", e.what());
    }

    const auto& mode = field(j, "", "mode");
    if (mode == "total") c.mode = SearchMode::Total;
    else if (mode == "edge") c.mode = SearchMode::EdgeOnly;
    else throw SchemaError("mode", "expected \"total\" or \"edge\"");

    const auto& labels = field(j, "", "labels");
    if (!labels.is_object()) throw SchemaError("labels", "expected an object");
    c.vertex_labels = detail::as_int_array(field(labels, "labels", "vertex_labels"), "labels.vertex_labels");
    c.edge_labels = detail::as_int_array(field(labels, "labels", "edge_labels"), "labels.edge_labels");
    const std::size_t want_vertex = c.mode == SearchMode::Total ? c.graph.order() : 0;
    if (c.vertex_labels.size() != want_vertex) {
        throw SchemaError("labels.vertex_labels", "expected " + std::to_string(want_vertex) + " entries");
    }
    if (c.edge_labels.size() != c.graph.size()) {
        throw SchemaError("labels.edge_labels", "expected " + std::to_string(c.graph.size()) + " entries");
    }

    c.weights = detail::as_int_array(field(j, "", "weights"), "weights");
    if (c.weights.size() != c.graph.order()) throw SchemaError("weights", "expected one weight per vertex");
    c.distinct_count = detail::as_count(field(j, "", "distinct_count"), "distinct_count");
    const auto& valid = field(j, "", "valid");
    if (!valid.is_boolean()) throw SchemaError("valid", "expected a boolean");
    c.valid = valid.get<bool>();

    const auto& prov = field(j, "", "provenance");
    if (!prov.is_object() || !prov.contains("source") || !prov["source"].is_string()) {
        throw SchemaError("provenance.source", "expected a string");
    }
    c.provenance = prov;
    if (j.contains("citation")) {
        if (!j["citation"].is_string()) throw SchemaError("citation", "expected a string");
        c.citation = j["citation"].get<std::string>();
    }

    static const char* const known[] = {"graph", "mode", "labels", "weights", "distinct_count", "valid", "provenance", "citation"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) c.extra[key] = value;
    }
    return c;
}

// Schema checks only; the stored claims are not re-derived.
inline Certificate parse_certificate(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

/// Differences between a certificate's stored claims and re-verification.
inline std::vector<std::string> integrity_problems(const Certificate& c, const VerifyReport& report) {
    std::vector<std::string> out;
    for (const auto& p : report.problems) out.push_back("labels: " + p);
    if (!report.bijection_ok) return out;
    if (report.profile.weights != c.weights) out.push_back("weights: stored weights differ from recomputed weights");
    if (report.profile.distinct_count != c.distinct_count) {
        out.push_back("distinct_count: stored " + std::to_string(c.distinct_count) + ", recomputed " +
                      std::to_string(report.profile.distinct_count));
    }
    if (report.valid() != c.valid) out.push_back("valid: stored flag disagrees with re-verification");
    return out;
}

/// Schema checks plus full re-verification; any disagreement between the
/// stored claims and the labels raises IntegrityError.
inline Certificate read_certificate(std::string_view text) {
    Certificate c = parse_certificate(text);
    const auto problems = integrity_problems(c, reverify(c));
    if (!problems.empty()) {
        std::string msg = "certificate failed re-verification:";
        for (const auto& p : problems) msg += " " + p + ";";
        throw IntegrityError(msg);
    }
    return c;
}

inline std::string export_dot(const Certificate& c) {
    std::string out = "graph G {\n";
    for (std::size_t v = 0; v < c.graph.order(); ++v) {
        const std::string w = std::to_string(c.weights.at(v));
        const std::string note = c.mode == SearchMode::Total ? std::to_string(c.vertex_labels.at(v)) + "/" + w : w;
        out += "  v" + std::to_string(v) + " [label=\"v" + std::to_string(v) + " [" + note + "]\"];\n";
    }
    for (std::size_t e = 0; e < c.graph.size(); ++e) {
        const auto& edge = c.graph.edge(e);
        out += "  v" + std::to_string(edge.u) + " -- v" + std::to_string(edge.v) + " [label=\"" +
               std::to_string(c.edge_labels.at(e)) + "\"];\n";
    }
    return out + "}\n";
}

} // namespace lat
