#pragma once

#include "lat/error.hpp"
#include "lat/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lat {

enum class GraphFormat { EdgeList, Graph6 };

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

} // namespace detail

/// Edge-list text: one "u v" pair per line, with an optional leading
/// "p=<n>" line declaring the vertex count (needed for isolated vertices).
/// Blank lines and lines starting with '#' are ignored.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::optional<std::size_t> declared;
    std::size_t max_index_plus_one = 0;
    bool seen_content = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::size_t cur = pos;
        auto skip_blank = [&] {
            while (cur < eol && detail::is_blank(text[cur])) ++cur;
        };
        auto read_number = [&]() -> std::size_t {
            skip_blank();
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + cur, text.data() + eol, value);
            if (ec != std::errc{}) throw ParseError(cur, "expected a decimal vertex index");
            cur = static_cast<std::size_t>(ptr - text.data());
            return value;
        };

        skip_blank();
        if (cur < eol && text[cur] != '#') {
            if (text.compare(cur, 2, "p=") == 0) {
                if (seen_content) throw ParseError(cur, "'p=' must be the first line");
                cur += 2;
                declared = read_number();
            } else {
                const std::size_t a = read_number();
                if (cur < eol && !detail::is_blank(text[cur])) throw ParseError(cur, "expected whitespace between indices");
                const std::size_t b = read_number();
                edges.push_back({a, b});
                max_index_plus_one = std::max({max_index_plus_one, a + 1, b + 1});
            }
            skip_blank();
            if (cur < eol) throw ParseError(cur, "unexpected trailing text");
            seen_content = true;
        }
        pos = eol + 1;
    }

    const std::size_t p = declared.value_or(max_index_plus_one);
    if (declared && max_index_plus_one > p) {
        throw ValidationError("vertex index " + std::to_string(max_index_plus_one - 1) + " out of range for p=" +
                              std::to_string(p));
    }
    return Graph(p, std::move(edges));
}

// Canonical order, no trailing newline; "p=<n>" only when the edges alone
// would not imply the vertex count.
inline std::string serialize_edge_list(const Graph& g) {
    std::size_t implied = 0;
    for (const auto& e : g.edges()) implied = std::max(implied, e.v + 1);
    std::string out;
    if (implied != g.order()) out = "p=" + std::to_string(g.order());
    for (const auto& e : g.edges()) {
        if (!out.empty()) out += '\n';
        out += std::to_string(e.u) + ' ' + std::to_string(e.v);
    }
    return out;
}

/// graph6 decoder (standard layout: size prefix N(n), then the upper
/// triangle read column by column, six bits per byte offset by 63).
inline Graph parse_graph6(std::string_view text) {
    std::size_t offset = 0;
    if (text.starts_with(">>graph6<<")) offset = 10;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> std::uint64_t {
        if (i >= text.size()) throw ParseError(i, "unexpected end of graph6 data");
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError(i, "byte outside graph6 range 63..126");
        return c - 63u;
    };

    std::uint64_t n = 0;
    std::size_t cur = offset;
    if (byte_at(cur) != 63) {
        n = byte_at(cur);
        cur += 1;
    } else if (cur + 1 < text.size() && text[cur + 1] == '~') {
        for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | byte_at(cur + 2 + k);
        cur += 8;
    } else {
        for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | byte_at(cur + 1 + k);
        cur += 4;
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - std::min(text.size(), cur) != nbytes) {
        throw ParseError(std::min(text.size(), cur + nbytes), "graph6 body has wrong length for n=" + std::to_string(n));
    }

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const std::uint64_t chunk = byte_at(cur + k / 6);
            if ((chunk >> (5 - k % 6)) & 1u) edges.push_back({i, j});
        }
    }
    for (; k < nbytes * 6; ++k) {
        if ((byte_at(cur + k / 6) >> (5 - k % 6)) & 1u) throw ParseError(cur + k / 6, "nonzero graph6 padding bit");
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::string serialize_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += '~';
        for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63u));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63u));
    }
    std::uint64_t chunk = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out += static_cast<char>(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out += static_cast<char>(63 + (chunk << (6 - filled)));
    return out;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? serialize_graph6(g) : serialize_edge_list(g);
}

// A single whitespace-free token of graph6 bytes reads as graph6; anything
// else is treated as an edge list.
inline GraphFormat detect_format(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) return GraphFormat::Graph6;
    if (text.empty()) return GraphFormat::EdgeList;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) return GraphFormat::EdgeList;
    }
    return text.starts_with("p=") ? GraphFormat::EdgeList : GraphFormat::Graph6;
}

} // namespace lat
