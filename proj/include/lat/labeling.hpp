#pragma once

#include "lat/error.hpp"
#include "lat/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lat {

using Label = std::int64_t;
using Weight = std::int64_t;

enum class SearchMode { Total, EdgeOnly };

inline const char* to_string(SearchMode mode) { return mode == SearchMode::Total ? "total" : "edge"; }

/// Labels on V ∪ E; a local antimagic total labeling when the combined
/// multiset is {1, ..., p+q} and adjacent vertex weights differ.
struct TotalLabeling {
    std::vector<Label> vertex_labels;
    std::vector<Label> edge_labels;
    friend bool operator==(const TotalLabeling&, const TotalLabeling&) = default;
};

// Labels on E only, bijective onto {1, ..., q}.
struct EdgeLabeling {
    std::vector<Label> edge_labels;
    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

struct WeightProfile {
    std::vector<Weight> weights;
    std::size_t distinct_count = 0;
    bool valid = false;  // adjacent vertices carry distinct weights
};

struct VerifyReport {
    WeightProfile profile;
    std::vector<EdgeId> violations;  // edges whose endpoints share a weight
    bool bijection_ok = false;
    std::vector<std::string> problems;  // human-readable bijection/shape issues

    bool valid() const { return bijection_ok && violations.empty(); }
};

struct BijectionCheck {
    std::vector<Label> duplicates;
    std::vector<Label> missing;
    std::vector<Label> out_of_range;

    bool ok() const { return duplicates.empty() && missing.empty() && out_of_range.empty(); }

    std::string describe() const {
        auto list = [](const char* name, const std::vector<Label>& xs) {
            std::string s;
            if (xs.empty()) return s;
            s = std::string(name) + " [";
            for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
            return s + "]";
        };
        std::string out;
        for (auto part : {list("duplicates", duplicates), list("missing", missing), list("out of range", out_of_range)}) {
            if (part.empty()) continue;
            if (!out.empty()) out += "; ";
            out += part;
        }
        return out;
    }
};

// Compares the multiset of `labels` against {1, ..., labels.size()}.
inline BijectionCheck check_bijection(std::span<const Label> labels) {
    const auto n = static_cast<Label>(labels.size());
    std::vector<int> seen(labels.size() + 1, 0);
    BijectionCheck out;
    for (Label x : labels) {
        if (x < 1 || x > n) {
            out.out_of_range.push_back(x);
            continue;
        }
        if (++seen[static_cast<std::size_t>(x)] == 2) out.duplicates.push_back(x);
    }
    for (Label x = 1; x <= n; ++x) {
        if (seen[static_cast<std::size_t>(x)] == 0) out.missing.push_back(x);
    }
    std::sort(out.duplicates.begin(), out.duplicates.end());
    return out;
}

inline std::vector<Label> all_labels(const TotalLabeling& f) {
    std::vector<Label> xs(f.vertex_labels);
    xs.insert(xs.end(), f.edge_labels.begin(), f.edge_labels.end());
    return xs;
}

namespace detail {

inline std::size_t count_distinct(std::vector<Weight> ws) {
    std::sort(ws.begin(), ws.end());
    return static_cast<std::size_t>(std::unique(ws.begin(), ws.end()) - ws.begin());
}

inline std::vector<EdgeId> weight_conflicts(const Graph& g, std::span<const Weight> ws) {
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < g.size(); ++e) {
        if (ws[g.edge(e).u] == ws[g.edge(e).v]) out.push_back(EdgeId{e});
    }
    return out;
}

inline WeightProfile make_profile(const Graph& g, std::vector<Weight> ws) {
    WeightProfile p;
    p.valid = weight_conflicts(g, ws).empty();
    p.distinct_count = count_distinct(ws);
    p.weights = std::move(ws);
    return p;
}

// Weight sums without any bijection requirement; sizes must already match.
inline std::vector<Weight> raw_total_weights(const Graph& g, const TotalLabeling& f) {
    std::vector<Weight> ws(f.vertex_labels.begin(), f.vertex_labels.end());
    for (std::size_t e = 0; e < g.size(); ++e) {
        ws[g.edge(e).u] += f.edge_labels[e];
        ws[g.edge(e).v] += f.edge_labels[e];
    }
    return ws;
}

inline std::vector<Weight> raw_edge_weights(const Graph& g, const EdgeLabeling& lab) {
    std::vector<Weight> ws(g.order(), 0);
    for (std::size_t e = 0; e < g.size(); ++e) {
        ws[g.edge(e).u] += lab.edge_labels[e];
        ws[g.edge(e).v] += lab.edge_labels[e];
    }
    return ws;
}

inline std::string shape_problem(const Graph& g, const TotalLabeling& f) {
    if (f.vertex_labels.size() != g.order())
        return "expected " + std::to_string(g.order()) + " vertex labels, got " + std::to_string(f.vertex_labels.size());
    if (f.edge_labels.size() != g.size())
        return "expected " + std::to_string(g.size()) + " edge labels, got " + std::to_string(f.edge_labels.size());
    return {};
}

inline std::string shape_problem(const Graph& g, const EdgeLabeling& lab) {
    if (lab.edge_labels.size() != g.size())
        return "expected " + std::to_string(g.size()) + " edge labels, got " + std::to_string(lab.edge_labels.size());
    return {};
}

} // namespace detail

/// w(v) = f(v) + sum of f over the edges at v. Throws BijectionError unless
/// the labels are exactly {1, ..., p+q}.
inline WeightProfile total_weights(const Graph& g, const TotalLabeling& f) {
    if (auto s = detail::shape_problem(g, f); !s.empty()) throw ValidationError(s);
    const auto labels = all_labels(f);
    if (auto check = check_bijection(labels); !check.ok()) {
        throw BijectionError("total labeling is not a bijection onto [1," + std::to_string(labels.size()) +
                             "]: " + check.describe());
    }
    return detail::make_profile(g, detail::raw_total_weights(g, f));
}

// g+(v): sum of g over the edges at v; isolated vertices weigh 0.
inline WeightProfile edge_weights(const Graph& g, const EdgeLabeling& lab) {
    if (auto s = detail::shape_problem(g, lab); !s.empty()) throw ValidationError(s);
    if (auto check = check_bijection(lab.edge_labels); !check.ok()) {
        throw BijectionError("edge labeling is not a bijection onto [1," + std::to_string(lab.edge_labels.size()) +
                             "]: " + check.describe());
    }
    return detail::make_profile(g, detail::raw_edge_weights(g, lab));
}

namespace detail {

template <class Labeling, class RawWeights>
VerifyReport verify_impl(const Graph& g, const Labeling& lab, std::span<const Label> labels, RawWeights raw) {
    VerifyReport report;
    if (auto s = shape_problem(g, lab); !s.empty()) {
        report.problems.push_back(s);
        return report;
    }
    const auto check = check_bijection(labels);
    report.bijection_ok = check.ok();
    if (!check.ok()) report.problems.push_back("not a bijection: " + check.describe());
    report.profile = make_profile(g, raw(g, lab));
    report.violations = weight_conflicts(g, report.profile.weights);
    return report;
}

} // namespace detail

/// Never throws on bad labels; every defect lands in the report.
inline VerifyReport verify_total(const Graph& g, const TotalLabeling& f) {
    const auto labels = all_labels(f);
    return detail::verify_impl(g, f, labels, detail::raw_total_weights);
}

inline VerifyReport verify_edge(const Graph& g, const EdgeLabeling& lab) {
    return detail::verify_impl(g, lab, lab.edge_labels, detail::raw_edge_weights);
}

} // namespace lat
