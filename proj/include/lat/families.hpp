#pragma once

#include "lat/error.hpp"
#include "lat/graph.hpp"

#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace lat {

namespace family {

struct Empty { std::size_t n = 0; };              // O_n
struct Path { std::size_t n = 1; };               // P_n, n >= 1
struct Cycle { std::size_t n = 3; };              // C_n, n >= 3
struct Complete { std::size_t n = 0; };           // K_n
struct CompleteBipartite { std::size_t a = 0, b = 0; };
struct Wheel { std::size_t n = 3; };              // K_1 v C_n, apex last
struct Fan { std::size_t n = 1; };                // K_1 v P_n, apex last
struct K2PlusEmpty { std::size_t n = 0; };        // K_2 + O_n, K_2 on vertices 0 and 1
struct JoinCompleteCycle { std::size_t m = 0, n = 3; };  // K_m v C_n, the K_m block last
struct CycleJoinEmpty { std::size_t p = 3, m = 0; };     // C_p v O_m, the O_m block last

} // namespace family

using FamilySpec = std::variant<family::Empty, family::Path, family::Cycle, family::Complete,
                                family::CompleteBipartite, family::Wheel, family::Fan, family::K2PlusEmpty,
                                family::JoinCompleteCycle, family::CycleJoinEmpty>;

namespace detail {

inline void require(bool ok, const char* constraint) {
    if (!ok) throw ParameterError(std::string("parameter out of range: ") + constraint);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

} // namespace detail

inline void validate(const FamilySpec& spec) {
    using detail::require;
    std::visit(
        [](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, family::Path>) require(f.n >= 1, "path requires n >= 1");
            if constexpr (std::is_same_v<T, family::Cycle>) require(f.n >= 3, "cycle requires n >= 3");
            if constexpr (std::is_same_v<T, family::Wheel>) require(f.n >= 3, "wheel requires n >= 3");
            if constexpr (std::is_same_v<T, family::Fan>) require(f.n >= 1, "fan requires n >= 1");
            if constexpr (std::is_same_v<T, family::JoinCompleteCycle>)
                require(f.n >= 3, "join-complete-cycle requires cycle length n >= 3");
            if constexpr (std::is_same_v<T, family::CycleJoinEmpty>)
                require(f.p >= 3, "cycle-join-empty requires cycle length p >= 3");
        },
        spec);
}

/// Canonical graph for a family. Cone-like families put the apex block at
/// the highest indices so the base graph keeps indices 0..n-1.
inline Graph generate(const FamilySpec& spec) {
    validate(spec);
    using namespace family;
    return std::visit(
        [](const auto& f) -> Graph {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Empty>) return Graph(f.n);
            else if constexpr (std::is_same_v<T, Path>) return detail::path_graph(f.n);
            else if constexpr (std::is_same_v<T, Cycle>) return detail::cycle_graph(f.n);
            else if constexpr (std::is_same_v<T, Complete>) return detail::complete_graph(f.n);
            else if constexpr (std::is_same_v<T, CompleteBipartite>) return join(Graph(f.a), Graph(f.b));
            else if constexpr (std::is_same_v<T, Wheel>) return join(detail::cycle_graph(f.n), Graph(1));
            else if constexpr (std::is_same_v<T, Fan>) return join(detail::path_graph(f.n), Graph(1));
            else if constexpr (std::is_same_v<T, K2PlusEmpty>) return disjoint_union(detail::complete_graph(2), Graph(f.n));
            else if constexpr (std::is_same_v<T, JoinCompleteCycle>)
                return join(detail::cycle_graph(f.n), detail::complete_graph(f.m));
            else return join(detail::cycle_graph(f.p), Graph(f.m));
        },
        spec);
}

// Family names as used on the command line.
inline std::string family_name(const FamilySpec& spec) {
    static constexpr const char* names[] = {"empty", "path", "cycle", "complete", "complete-bipartite",
                                            "wheel", "fan", "k2-plus-empty", "join-complete-cycle",
                                            "cycle-join-empty"};
    return names[spec.index()];
}

inline std::vector<std::size_t> family_params(const FamilySpec& spec) {
    using namespace family;
    return std::visit(
        [](const auto& f) -> std::vector<std::size_t> {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, CompleteBipartite>) return {f.a, f.b};
            else if constexpr (std::is_same_v<T, JoinCompleteCycle>) return {f.m, f.n};
            else if constexpr (std::is_same_v<T, CycleJoinEmpty>) return {f.p, f.m};
            else return {f.n};
        },
        spec);
}

// "cycle:4", "complete-bipartite:2,3"
inline std::string to_string(const FamilySpec& spec) {
    std::string out = family_name(spec) + ":";
    const auto params = family_params(spec);
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
    }
    return out;
}

inline FamilySpec make_family(std::string_view name, std::span<const std::size_t> params) {
    using namespace family;
    auto want = [&](std::size_t count) {
        if (params.size() != count) {
            throw ParameterError("family '" + std::string(name) + "' takes " + std::to_string(count) +
                                 " parameter(s), got " + std::to_string(params.size()));
        }
    };
    FamilySpec spec;
    if (name == "empty") { want(1); spec = Empty{params[0]}; }
    else if (name == "path") { want(1); spec = Path{params[0]}; }
    else if (name == "cycle") { want(1); spec = Cycle{params[0]}; }
    else if (name == "complete") { want(1); spec = Complete{params[0]}; }
    else if (name == "complete-bipartite") { want(2); spec = CompleteBipartite{params[0], params[1]}; }
    else if (name == "wheel") { want(1); spec = Wheel{params[0]}; }
    else if (name == "fan") { want(1); spec = Fan{params[0]}; }
    else if (name == "k2-plus-empty") { want(1); spec = K2PlusEmpty{params[0]}; }
    else if (name == "join-complete-cycle") { want(2); spec = JoinCompleteCycle{params[0], params[1]}; }
    else if (name == "cycle-join-empty") { want(2); spec = CycleJoinEmpty{params[0], params[1]}; }
    else throw ParameterError("unknown family '" + std::string(name) + "'");
    validate(spec);
    return spec;
}

inline std::size_t parse_count(std::string_view text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ParameterError("expected a nonnegative integer, got '" + std::string(text) + "'");
    }
    return value;
}

// Inverse of to_string.
inline FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParameterError("family spec needs 'name:params', got '" + std::string(text) + "'");
    std::vector<std::size_t> params;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        params.push_back(parse_count(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return make_family(text.substr(0, colon), params);
}

} // namespace lat
