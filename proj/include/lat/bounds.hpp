#pragma once

#include "lat/chromatic.hpp"
#include "lat/families.hpp"
#include "lat/graph.hpp"
#include "lat/labeling.hpp"
#include "lat/solver.hpp"
#include "lat/transforms.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace lat {

enum class Quantity { ChiLat, ChiLa };
enum class KnownStatus { Theorem, Conjecture, Range };

inline const char* to_string(Quantity q) { return q == Quantity::ChiLat ? "chi_lat" : "chi_la"; }

inline const char* to_string(KnownStatus s) {
    switch (s) {
    case KnownStatus::Theorem: return "theorem";
    case KnownStatus::Conjecture: return "conjecture";
    case KnownStatus::Range: return "range";
    }
    return "?";
}

struct KnownResult {
    Quantity quantity = Quantity::ChiLat;
    std::size_t lo = 0;
    std::size_t hi = 0;
    KnownStatus status = KnownStatus::Theorem;
    std::string citation;

    bool exact() const { return lo == hi; }
    bool contains(std::size_t v) const { return lo <= v && v <= hi; }
};

namespace detail {

inline KnownResult theorem(std::size_t v, std::string citation, Quantity q = Quantity::ChiLat) {
    return {q, v, v, KnownStatus::Theorem, std::move(citation)};
}

inline const char* const kCompleteCite = "complete graphs: chi_lat(K_p) = p";
inline const char* const kCycleCite = "cycles: chi_lat(C_n) = 2 for even n, 3 for odd n";
inline const char* const kWheelCite = "even wheels: chi_lat(W_p) = 3 for even p >= 4";

inline std::optional<KnownResult> cycle_value(std::size_t n) { return theorem(n % 2 == 0 ? 2 : 3, kCycleCite); }

inline std::optional<KnownResult> wheel_value(std::size_t n) {
    if (n == 3) return theorem(4, kCompleteCite);  // W_3 = K_4
    if (n % 2 == 0) return theorem(3, kWheelCite);
    return std::nullopt;  // odd wheels are open
}

} // namespace detail

/// Values established for the named families. Conjectured values carry
/// status Conjecture and must never be used as bounds.
inline std::optional<KnownResult> known_value(const FamilySpec& spec) {
    using namespace family;
    using detail::theorem;
    return std::visit(
        [](const auto& f) -> std::optional<KnownResult> {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Empty>) {
                if (f.n == 0) return std::nullopt;
                return theorem(f.n, "empty graphs: chi_lat(O_n) = n");
            } else if constexpr (std::is_same_v<T, Complete>) {
                if (f.n == 0) return std::nullopt;
                return theorem(f.n, detail::kCompleteCite);
            } else if constexpr (std::is_same_v<T, Cycle>) {
                return detail::cycle_value(f.n);
            } else if constexpr (std::is_same_v<T, Path>) {
                if (f.n == 1) return theorem(1, detail::kCompleteCite);
                if (f.n % 2 == 0) {
                    return theorem(f.n == 4 ? 3 : 2, "even paths: chi_lat(P_n) = 2 except chi_lat(P_4) = 3");
                }
                if (f.n <= 7) return theorem(2, "odd paths n = 3, 5, 7: explicit two-weight labelings");
                return KnownResult{Quantity::ChiLat, 2, 2, KnownStatus::Conjecture,
                                   "odd paths conjecture: chi_lat(P_n) = 2 for odd n >= 3"};
            } else if constexpr (std::is_same_v<T, K2PlusEmpty>) {
                if (f.n == 0) return theorem(2, detail::kCompleteCite);
                return theorem(f.n <= 2 ? 2 : f.n, "K_2 + O_n: chi_lat = 2 for n = 1, 2 and n otherwise");
            } else if constexpr (std::is_same_v<T, Wheel>) {
                return detail::wheel_value(f.n);
            } else if constexpr (std::is_same_v<T, Fan>) {
                if (f.n >= 3 && f.n % 2 == 1) {
                    return theorem(3, "odd fans: chi_la(F_{2k+1}) = 3", Quantity::ChiLa);
                }
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
                const std::size_t p = f.a, q = f.b;
                if (p < 1 || q < 1) return std::nullopt;
                const bool listed = p == 1 || (p == 2 && q == 2) || (p % 2 == q % 2 && 2 <= p && p < q) || (p % 2 != q % 2);
                if (!listed) return std::nullopt;
                return theorem(2, "complete bipartite: chi_lat(K_{p,q}) = 2 for p = 1; p = q = 2; "
                                  "p = q mod 2 with 2 <= p < q; p != q mod 2");
            } else if constexpr (std::is_same_v<T, JoinCompleteCycle>) {
                // K_{m-1} v C_n with m = f.m + 1
                const std::size_t m = f.m + 1, n = f.n;
                if (m < 3) return f.m == 1 ? detail::wheel_value(n) : detail::cycle_value(n);
                const char* cite = "K_{m-1} v C_n: chi_lat = m+1 for m, n even and m+2 for m, n odd";
                if (m % 2 == 0 && n % 2 == 0) return theorem(m + 1, cite);
                if (m % 2 == 1 && n % 2 == 1) return theorem(m + 2, cite);
                return std::nullopt;
            } else {
                static_assert(std::is_same_v<T, CycleJoinEmpty>);
                if (f.m == 0) return detail::cycle_value(f.p);
                if (f.m == 1) return detail::wheel_value(f.p);
                if (f.m == 2 && f.p % 2 == 1) {
                    return KnownResult{Quantity::ChiLat, 4, 5, KnownStatus::Range,
                                       "C_p v O_2 for odd p >= 3: 4 <= chi_lat <= 5"};
                }
                return std::nullopt;
            }
        },
        spec);
}

struct ConeUpperBound {
    std::size_t value = 0;  // bound on chi_lat(G)
    bool exact_cone = false;  // the cone's chi_la was solved exactly
    std::size_t cone_value = 0;
    Graph graph;
    TotalLabeling witness;
};

/// chi_lat(G) <= chi_la(K_1 v G) - 1, witnessed by coning down the solver's
/// best edge labeling of the cone. Empty when the cone admits no local
/// antimagic labeling or the budget produced no incumbent.
inline std::optional<ConeUpperBound> chi_lat_upper_bound_via_cone(const Graph& g, const SolveBudget& budget) {
    const Graph cone = join(g, Graph(1));
    const auto result = solve_min_distinct(cone, SearchMode::EdgeOnly, budget);
    if (!result.certificate) return std::nullopt;
    const auto down = cone_to_total(cone, std::get<EdgeLabeling>(*result.certificate), VertexId{g.order()});
    ConeUpperBound out;
    out.exact_cone = result.status == SolveStatus::Exact;
    out.cone_value = result.upper;
    out.value = result.upper - 1;
    out.graph = down.graph;
    out.witness = down.labeling;
    return out;
}

struct UpperBound {
    std::size_t value = 0;
    std::string provenance;  // "cone-solver", "known-table" or "trivial"
};

struct BoundsReport {
    std::size_t chromatic = 0;
    std::size_t isolated_count = 0;
    std::size_t lower = 0;
    std::optional<UpperBound> upper;
    std::optional<KnownResult> known;
    std::optional<ConeUpperBound> cone;
    std::vector<std::string> notes;
};

inline BoundsReport bounds_report(const Graph& g, const SolveBudget& budget, const std::optional<FamilySpec>& family = {}) {
    BoundsReport r;
    r.chromatic = chromatic_number(g);
    r.isolated_count = g.isolated_count();
    r.lower = std::max(r.chromatic, r.isolated_count);
    r.notes.push_back("lower = max(chi(G), isolated vertices)");

    auto offer = [&](std::size_t value, const char* provenance) {
        if (!r.upper || value < r.upper->value) r.upper = UpperBound{value, provenance};
    };
    if (g.order() > 0) offer(g.order(), "trivial");

    r.cone = chi_lat_upper_bound_via_cone(g, budget);
    if (r.cone) {
        offer(r.cone->value, "cone-solver");
        r.notes.push_back(std::string("cone K_1 v G: chi_la ") + (r.cone->exact_cone ? "= " : "<= ") +
                          std::to_string(r.cone->cone_value) + ", so chi_lat(G) <= " + std::to_string(r.cone->value));
    } else {
        r.notes.push_back("cone K_1 v G gave no labeling (isolated edge or budget)");
    }

    if (family) {
        r.known = known_value(*family);
        if (r.known && r.known->quantity == Quantity::ChiLat) {
            if (r.known->status == KnownStatus::Conjecture) {
                r.notes.push_back("known-table entry is a conjecture; not used as a bound");
            } else {
                offer(r.known->hi, "known-table");
            }
        }
    }
    return r;
}

} // namespace lat
