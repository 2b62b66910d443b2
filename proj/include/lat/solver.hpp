#pragma once

#include "lat/chromatic.hpp"
#include "lat/error.hpp"
#include "lat/families.hpp"
#include "lat/graph.hpp"
#include "lat/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace lat {

struct SolveBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_millis = std::chrono::milliseconds(60'000);
    bool deterministic = true;

    void validate() const {
        if (!max_nodes && !max_millis) throw ParameterError("solve budget needs a node limit or a time limit");
        if (max_nodes && *max_nodes == 0) throw ParameterError("max_nodes must be positive");
        if (max_millis && max_millis->count() <= 0) throw ParameterError("max_millis must be positive");
    }
};

enum class SolveStatus { Exact, LowerUpper, Infeasible, Exhausted };

inline const char* to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Exact: return "exact";
    case SolveStatus::LowerUpper: return "lower-upper";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Exhausted: return "exhausted";
    }
    return "?";
}

using AnyLabeling = std::variant<TotalLabeling, EdgeLabeling>;

struct SolveResult {
    SolveStatus status = SolveStatus::Exhausted;
    std::size_t value = 0;  // meaningful for Exact
    std::size_t lower = 0;
    std::size_t upper = 0;  // Exact: lower == upper == value
    std::optional<AnyLabeling> certificate;
    std::uint64_t nodes_explored = 0;
};

enum class FindStatus { Found, None, Unknown };

inline const char* to_string(FindStatus s) {
    switch (s) {
    case FindStatus::Found: return "found";
    case FindStatus::None: return "none";
    case FindStatus::Unknown: return "unknown";
    }
    return "?";
}

struct FindResult {
    FindStatus status = FindStatus::Unknown;
    std::optional<AnyLabeling> certificate;
    std::uint64_t nodes_explored = 0;
};

struct EnumerateResult {
    std::size_t visited = 0;
    bool complete = false;  // search space closed without budget or visitor stop
    std::uint64_t nodes_explored = 0;
};

/// Slot classes known a priori for a built-in family: every slot in a class
/// is mapped onto the class representative by some automorphism, so the
/// smallest label may be pinned to representatives without losing optima.
struct SymmetryHint {
    Graph graph;
    SearchMode mode = SearchMode::Total;
    std::vector<std::size_t> representative;  // per slot
};

struct SolveOptions {
    bool pruning = true;  // false: plain enumeration, leaves judged in full (differential testing)
    std::optional<SymmetryHint> symmetry;
};

// Slots are vertices then edges (Total) or edges only (EdgeOnly).
struct SlotLayout {
    SearchMode mode = SearchMode::Total;
    std::size_t vertex_slots = 0;
    std::vector<std::vector<std::size_t>> slot_vertices;
    std::vector<std::size_t> slots_per_vertex;

    SlotLayout(const Graph& g, SearchMode m) : mode(m), vertex_slots(m == SearchMode::Total ? g.order() : 0) {
        slots_per_vertex.assign(g.order(), 0);
        for (std::size_t v = 0; v < vertex_slots; ++v) {
            slot_vertices.push_back({v});
            ++slots_per_vertex[v];
        }
        for (const auto& e : g.edges()) {
            slot_vertices.push_back({e.u, e.v});
            ++slots_per_vertex[e.u];
            ++slots_per_vertex[e.v];
        }
    }

    std::size_t size() const { return slot_vertices.size(); }

    AnyLabeling labeling(const std::vector<Label>& slot_labels) const {
        if (mode == SearchMode::EdgeOnly) return EdgeLabeling{slot_labels};
        TotalLabeling f;
        f.vertex_labels.assign(slot_labels.begin(), slot_labels.begin() + static_cast<std::ptrdiff_t>(vertex_slots));
        f.edge_labels.assign(slot_labels.begin() + static_cast<std::ptrdiff_t>(vertex_slots), slot_labels.end());
        return f;
    }
};

inline VerifyReport verify_any(const Graph& g, const AnyLabeling& lab) {
    return std::visit(
        [&](const auto& l) {
            if constexpr (std::is_same_v<std::decay_t<decltype(l)>, TotalLabeling>) return verify_total(g, l);
            else return verify_edge(g, l);
        },
        lab);
}

// An edge whose endpoints both have degree 1 forces g+(u) = g+(v).
inline bool has_isolated_edge(const Graph& g) {
    return std::any_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return g.degree(e.u) == 1 && g.degree(e.v) == 1; });
}

namespace detail {

// Slot order: most vertices completed first, then the slot touching the
// vertex closest to completion, then lowest index.
inline std::vector<std::size_t> slot_order(const Graph& g, const SlotLayout& layout) {
    const std::size_t n = layout.size();
    std::vector<std::size_t> left = layout.slots_per_vertex;
    std::vector<bool> taken(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n, best_done = 0, best_near = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (taken[s]) continue;
            std::size_t done = 0, near = g.order() + 2;
            for (std::size_t v : layout.slot_vertices[s]) {
                done += left[v] == 1;
                near = std::min(near, left[v]);
            }
            if (best == n || done > best_done || (done == best_done && near < best_near)) {
                best = s;
                best_done = done;
                best_near = near;
            }
        }
        taken[best] = true;
        order.push_back(best);
        for (std::size_t v : layout.slot_vertices[best]) --left[v];
    }
    return order;
}

enum class Goal { Minimize, Find, Enumerate };

using Clock = std::chrono::steady_clock;

struct SharedSearch {
    std::atomic<std::size_t> k_bound{0};  // labelings with more distinct weights are rejected
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> next_top{0};

    std::mutex mu;
    std::optional<std::vector<Label>> best;
    std::size_t best_count = 0;
    std::size_t visited = 0;
    std::function<bool(const AnyLabeling&)> visitor;

    std::optional<std::uint64_t> max_nodes;
    std::optional<Clock::time_point> deadline;
};

class Search {
public:
    Search(const Graph& g, const SlotLayout& layout, const std::vector<std::size_t>& order, SharedSearch& shared,
           Goal goal, bool pruning, const std::vector<std::size_t>* reps, std::size_t stop_at)
        : g_(g), layout_(layout), order_(order), shared_(shared), goal_(goal), pruning_(pruning), reps_(reps),
          stop_at_(stop_at), n_labels_(layout.size()), used_(layout.size() + 1, 0), labels_(layout.size(), 0),
          partial_(g.order(), 0), remaining_(layout.slots_per_vertex) {
        for (std::size_t v = 0; v < g_.order(); ++v) {
            if (remaining_[v] == 0) add_weight(0);
        }
    }

    // split_top: share the first slot's labels with sibling workers.
    void run(bool split_top) {
        if (n_labels_ == 0) {
            leaf();
        } else if (!split_top) {
            dfs(0);
        } else {
            const std::size_t slot = order_[0];
            for (;;) {
                const auto label = static_cast<Label>(shared_.next_top.fetch_add(1) + 1);
                if (label > static_cast<Label>(n_labels_) || shared_.stop.load(std::memory_order_relaxed)) break;
                branch(0, slot, label);
            }
        }
        flush_nodes();
    }

private:
    void dfs(std::size_t pos) {
        if (pos == order_.size()) {
            leaf();
            return;
        }
        const std::size_t slot = order_[pos];
        for (Label label = 1; label <= static_cast<Label>(n_labels_); ++label) {
            if (used_[static_cast<std::size_t>(label)]) continue;
            branch(pos, slot, label);
            if (shared_.stop.load(std::memory_order_relaxed)) return;
        }
    }

    void branch(std::size_t pos, std::size_t slot, Label label) {
        if (label == 1 && reps_ && (*reps_)[slot] != slot) return;
        if (!tick()) return;
        if (place(slot, label)) dfs(pos + 1);
        unplace(slot, label);
    }

    bool tick() {
        if (++local_nodes_ >= next_check_) return slow_tick();
        return true;
    }

    bool slow_tick() {
        flush_nodes();
        const std::uint64_t total = shared_.nodes.load();
        if (shared_.max_nodes && total >= *shared_.max_nodes) {
            shared_.exhausted = true;
            shared_.stop = true;
            return false;
        }
        if (shared_.deadline && Clock::now() >= *shared_.deadline) {
            shared_.exhausted = true;
            shared_.stop = true;
            return false;
        }
        std::uint64_t step = 1024;
        if (shared_.max_nodes) step = std::min<std::uint64_t>(step, *shared_.max_nodes - total);
        next_check_ = local_nodes_ + step;
        return true;
    }

    void flush_nodes() {
        shared_.nodes.fetch_add(local_nodes_ - flushed_);
        flushed_ = local_nodes_;
    }

    void add_weight(Weight w) {
        for (auto& [value, count] : weights_) {
            if (value == w) {
                ++count;
                return;
            }
        }
        weights_.push_back({w, 1});
    }

    void remove_weight(Weight w) {
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (weights_[i].first != w) continue;
            if (--weights_[i].second == 0) {
                weights_[i] = weights_.back();
                weights_.pop_back();
            }
            return;
        }
    }

    bool place(std::size_t slot, Label label) {
        used_[static_cast<std::size_t>(label)] = 1;
        labels_[slot] = label;
        bool ok = true;
        for (std::size_t v : layout_.slot_vertices[slot]) {
            partial_[v] += label;
            if (--remaining_[v] != 0) continue;
            add_weight(partial_[v]);
            if (!pruning_ || !ok) continue;
            for (std::size_t nb : g_.neighbors(v)) {
                if (remaining_[nb] == 0 && partial_[nb] == partial_[v]) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || !pruning_) return ok;
        const std::size_t k = shared_.k_bound.load(std::memory_order_relaxed);
        if (weights_.size() > k) return false;
        if (weights_.size() + 2 > k) return lookahead(k);
        return true;
    }

    void unplace(std::size_t slot, Label label) {
        for (std::size_t v : layout_.slot_vertices[slot]) {
            if (remaining_[v] == 0) remove_weight(partial_[v]);
            ++remaining_[v];
            partial_[v] -= label;
        }
        used_[static_cast<std::size_t>(label)] = 0;
    }

    // Every unfinished vertex either reaches an existing weight (within the
    // range its remaining slots can still produce, and not clashing with a
    // finished neighbour) or forces a new one. Two adjacent forced vertices
    // force two.
    bool lookahead(std::size_t k) {
        free_prefix_.assign(1, 0);
        for (std::size_t x = 1; x <= n_labels_; ++x) {
            if (!used_[x]) free_prefix_.push_back(free_prefix_.back() + static_cast<Weight>(x));
        }
        const std::size_t free_count = free_prefix_.size() - 1;
        const Weight free_total = free_prefix_.back();
        forced_.clear();
        for (std::size_t v = 0; v < g_.order(); ++v) {
            const std::size_t r = remaining_[v];
            if (r == 0) continue;
            const Weight lo = partial_[v] + free_prefix_[r];
            const Weight hi = partial_[v] + free_total - free_prefix_[free_count - r];
            bool reachable = false;
            for (const auto& [w, count] : weights_) {
                if (w < lo || w > hi) continue;
                if (r == 1) {
                    const Weight need = w - partial_[v];
                    if (need < 1 || need > static_cast<Weight>(n_labels_) || used_[static_cast<std::size_t>(need)]) continue;
                }
                bool clash = false;
                for (std::size_t nb : g_.neighbors(v)) {
                    if (remaining_[nb] == 0 && partial_[nb] == w) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    reachable = true;
                    break;
                }
            }
            if (!reachable) forced_.push_back(v);
        }
        if (forced_.empty()) return true;
        if (weights_.size() + 1 > k) return false;
        if (weights_.size() + 2 > k) {
            for (std::size_t i = 0; i < forced_.size(); ++i)
                for (std::size_t j = i + 1; j < forced_.size(); ++j)
                    if (g_.adjacent(forced_[i], forced_[j])) return false;
        }
        return true;
    }

    void leaf() {
        if (!pruning_) {
            for (const auto& e : g_.edges()) {
                if (partial_[e.u] == partial_[e.v]) return;
            }
        }
        const std::size_t d = weights_.size();
        if (d > shared_.k_bound.load()) return;
        std::lock_guard lock(shared_.mu);
        switch (goal_) {
        case Goal::Minimize:
            if (shared_.best && d >= shared_.best_count) return;
            shared_.best = labels_;
            shared_.best_count = d;
            if (d == 0 || d <= stop_at_) {
                shared_.stop = true;
            } else {
                shared_.k_bound = d - 1;
            }
            break;
        case Goal::Find:
            shared_.best = labels_;
            shared_.best_count = d;
            shared_.stop = true;
            break;
        case Goal::Enumerate:
            ++shared_.visited;
            if (!shared_.visitor(layout_.labeling(labels_))) shared_.stop = true;
            break;
        }
    }

    const Graph& g_;
    const SlotLayout& layout_;
    const std::vector<std::size_t>& order_;
    SharedSearch& shared_;
    Goal goal_;
    bool pruning_;
    const std::vector<std::size_t>* reps_;
    std::size_t stop_at_;
    std::size_t n_labels_;

    std::vector<char> used_;
    std::vector<Label> labels_;
    std::vector<Weight> partial_;
    std::vector<std::size_t> remaining_;
    std::vector<std::pair<Weight, std::size_t>> weights_;  // finished weights with multiplicity
    std::vector<Weight> free_prefix_;
    std::vector<std::size_t> forced_;

    std::uint64_t local_nodes_ = 0;
    std::uint64_t flushed_ = 0;
    std::uint64_t next_check_ = 1;
};

struct SearchOutcome {
    std::optional<std::vector<Label>> best;
    std::size_t best_count = 0;
    bool exhausted = false;
    std::size_t visited = 0;
    std::uint64_t nodes = 0;
};

inline SearchOutcome run_search(const Graph& g, SearchMode mode, Goal goal, std::size_t k, std::size_t stop_at,
                                const SolveBudget& budget, const SolveOptions& options,
                                std::function<bool(const AnyLabeling&)> visitor = {}) {
    budget.validate();
    const SlotLayout layout(g, mode);
    const auto order = slot_order(g, layout);
    const std::vector<std::size_t>* reps = nullptr;
    if (options.symmetry && options.symmetry->mode == mode && options.symmetry->graph == g) {
        reps = &options.symmetry->representative;
    }

    SharedSearch shared;
    shared.k_bound = k;
    shared.visitor = std::move(visitor);
    shared.max_nodes = budget.max_nodes;
    if (budget.max_millis) shared.deadline = Clock::now() + *budget.max_millis;

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const bool parallel = !budget.deterministic && hw > 1 && layout.size() > 1 && goal != Goal::Enumerate;
    if (!parallel) {
        Search(g, layout, order, shared, goal, options.pruning, reps, stop_at).run(false);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < hw; ++t) {
            workers.emplace_back([&] {
                Search(g, layout, order, shared, goal, options.pruning, reps, stop_at).run(true);
            });
        }
    }

    SearchOutcome out;
    out.best = std::move(shared.best);
    out.best_count = shared.best_count;
    out.exhausted = shared.exhausted.load();
    out.visited = shared.visited;
    out.nodes = shared.nodes.load();
    return out;
}

inline std::size_t solver_lower_bound(const Graph& g, SearchMode mode) {
    if (g.order() <= kMaxChromaticOrder) return mode == SearchMode::Total ? chi_lat_lower_bound(g) : chromatic_number(g);
    const std::size_t base = g.size() > 0 ? 2 : 1;
    return mode == SearchMode::Total ? std::max(base, g.isolated_count()) : base;
}

} // namespace detail

inline constexpr std::size_t kMaxBruteForceUniverse = 10;

/// Exhaustive oracle: tries every bijection onto the label universe.
inline SolveResult brute_force_min_distinct(const Graph& g, SearchMode mode) {
    const SlotLayout layout(g, mode);
    if (layout.size() > kMaxBruteForceUniverse) {
        throw RefusalError("brute force supports label universes up to " + std::to_string(kMaxBruteForceUniverse) +
                           ", got " + std::to_string(layout.size()));
    }
    std::vector<Label> perm(layout.size());
    std::iota(perm.begin(), perm.end(), Label{1});
    SolveResult out;
    std::optional<std::size_t> best;
    do {
        ++out.nodes_explored;
        const auto lab = layout.labeling(perm);
        const auto weights = std::holds_alternative<TotalLabeling>(lab)
                                 ? detail::raw_total_weights(g, std::get<TotalLabeling>(lab))
                                 : detail::raw_edge_weights(g, std::get<EdgeLabeling>(lab));
        if (!detail::weight_conflicts(g, weights).empty()) continue;
        const std::size_t d = detail::count_distinct(weights);
        if (!best || d < *best) {
            best = d;
            out.certificate = lab;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!best) {
        out.status = SolveStatus::Infeasible;
        return out;
    }
    out.status = SolveStatus::Exact;
    out.value = out.lower = out.upper = *best;
    return out;
}

/// Minimum number of distinct induced weights over all valid labelings,
/// by branch-and-bound with incumbent tightening. Never reports Exact
/// unless the search space was closed.
inline SolveResult solve_min_distinct(const Graph& g, SearchMode mode, const SolveBudget& budget,
                                      const SolveOptions& options = {}) {
    budget.validate();
    SolveResult out;
    if (mode == SearchMode::EdgeOnly && has_isolated_edge(g)) {
        out.status = SolveStatus::Infeasible;
        return out;
    }
    const std::size_t lower = detail::solver_lower_bound(g, mode);
    const std::size_t stop_at = options.pruning ? lower : 0;
    auto run = detail::run_search(g, mode, detail::Goal::Minimize, g.order(), stop_at, budget, options);
    out.nodes_explored = run.nodes;
    const SlotLayout layout(g, mode);
    if (run.best) out.certificate = layout.labeling(*run.best);

    if (run.best && (!run.exhausted || run.best_count <= lower)) {
        out.status = SolveStatus::Exact;
        out.value = out.lower = out.upper = run.best_count;
    } else if (run.best) {
        out.status = SolveStatus::LowerUpper;
        out.lower = lower;
        out.upper = run.best_count;
    } else {
        out.status = run.exhausted ? SolveStatus::Exhausted : SolveStatus::Infeasible;
        out.lower = lower;
    }
    return out;
}

/// A valid labeling with at most k distinct weights, a proof that none
/// exists (search closed), or Unknown when the budget ran out.
inline FindResult find_with_at_most_k(const Graph& g, std::size_t k, SearchMode mode, const SolveBudget& budget,
                                      const SolveOptions& options = {}) {
    if (k < 1) throw ParameterError("k must be >= 1");
    budget.validate();
    FindResult out;
    if (mode == SearchMode::EdgeOnly && has_isolated_edge(g)) {
        out.status = FindStatus::None;
        return out;
    }
    if (options.pruning && k < detail::solver_lower_bound(g, mode)) {
        out.status = FindStatus::None;
        return out;
    }
    auto run = detail::run_search(g, mode, detail::Goal::Find, k, 0, budget, options);
    out.nodes_explored = run.nodes;
    if (run.best) {
        out.status = FindStatus::Found;
        out.certificate = SlotLayout(g, mode).labeling(*run.best);
    } else {
        out.status = run.exhausted ? FindStatus::Unknown : FindStatus::None;
    }
    return out;
}

/// Calls `visit` on each valid labeling with at most k distinct weights, in
/// search order, until it returns false or the budget runs out.
inline EnumerateResult enumerate_labelings(const Graph& g, SearchMode mode, std::size_t k, const SolveBudget& budget,
                                           const std::function<bool(const AnyLabeling&)>& visit,
                                           const SolveOptions& options = {}) {
    EnumerateResult out;
    if (mode == SearchMode::EdgeOnly && has_isolated_edge(g)) {
        out.complete = true;
        return out;
    }
    bool stopped_by_visitor = false;
    auto run = detail::run_search(g, mode, detail::Goal::Enumerate, k, 0, budget, options, [&](const AnyLabeling& lab) {
        const bool more = visit(lab);
        stopped_by_visitor = !more;
        return more;
    });
    out.visited = run.visited;
    out.complete = !run.exhausted && !stopped_by_visitor;
    out.nodes_explored = run.nodes;
    return out;
}

namespace detail {

inline std::vector<std::size_t> rotation(std::size_t n, std::size_t total) {
    std::vector<std::size_t> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    return perm;
}

inline std::vector<std::size_t> swap_perm(std::size_t a, std::size_t b, std::size_t total) {
    std::vector<std::size_t> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[a], perm[b]);
    return perm;
}

// Reflection of the block [0, n), other vertices fixed.
inline std::vector<std::size_t> reflection(std::size_t n, std::size_t total) {
    std::vector<std::size_t> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
    return perm;
}

inline void add_transpositions(std::vector<std::vector<std::size_t>>& gens, std::size_t from, std::size_t to,
                               std::size_t total) {
    for (std::size_t i = from; i + 1 < to; ++i) gens.push_back(swap_perm(i, i + 1, total));
}

// Generators of a subgroup of Aut(generate(spec)), as vertex permutations.
inline std::vector<std::vector<std::size_t>> family_automorphisms(const FamilySpec& spec, std::size_t p) {
    using namespace family;
    std::vector<std::vector<std::size_t>> gens;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Empty> || std::is_same_v<T, Complete>) {
                add_transpositions(gens, 0, p, p);
            } else if constexpr (std::is_same_v<T, Path>) {
                gens.push_back(reflection(f.n, p));
            } else if constexpr (std::is_same_v<T, Fan>) {
                gens.push_back(reflection(f.n, p));
            } else if constexpr (std::is_same_v<T, Cycle>) {
                gens.push_back(rotation(f.n, p));
                gens.push_back(reflection(f.n, p));
            } else if constexpr (std::is_same_v<T, Wheel>) {
                gens.push_back(rotation(f.n, p));
            } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
                add_transpositions(gens, 0, f.a, p);
                add_transpositions(gens, f.a, p, p);
            } else if constexpr (std::is_same_v<T, K2PlusEmpty>) {
                gens.push_back(swap_perm(0, 1, p));
                add_transpositions(gens, 2, p, p);
            } else if constexpr (std::is_same_v<T, JoinCompleteCycle>) {
                gens.push_back(rotation(f.n, p));
                add_transpositions(gens, f.n, p, p);
            } else if constexpr (std::is_same_v<T, CycleJoinEmpty>) {
                gens.push_back(rotation(f.p, p));
                add_transpositions(gens, f.p, p, p);
            }
        },
        spec);
    return gens;
}

} // namespace detail

/// Slot classes for a built-in family under its evident symmetries (cycle
/// rotation, interchangeable vertices of complete/empty blocks, path
/// reflection). Each generator is checked to preserve the edge set.
inline SymmetryHint symmetry_hint(const FamilySpec& spec, SearchMode mode) {
    SymmetryHint hint;
    hint.graph = generate(spec);
    hint.mode = mode;
    const Graph& g = hint.graph;
    const SlotLayout layout(g, mode);
    const std::size_t n = layout.size();

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (const auto& perm : detail::family_automorphisms(spec, g.order())) {
        for (std::size_t s = 0; s < n; ++s) {
            std::size_t image;
            if (s < layout.vertex_slots) {
                image = perm[s];
            } else {
                const auto& e = g.edge(s - layout.vertex_slots);
                const auto mapped = g.find_edge(perm[e.u], perm[e.v]);
                if (!mapped) throw Error("internal: family symmetry is not an automorphism of " + to_string(spec));
                image = layout.vertex_slots + *mapped;
            }
            unite(s, image);
        }
    }
    hint.representative.resize(n);
    for (std::size_t s = 0; s < n; ++s) hint.representative[s] = find(s);
    return hint;
}

} // namespace lat
