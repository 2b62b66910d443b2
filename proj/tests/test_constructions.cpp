#include "lat/constructions.hpp"
#include "lat/solver.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace lat;

namespace {

std::vector<Weight> weights_of(const LabeledGraph& lg) { return verify_total(lg.graph, lg.labeling).profile.weights; }

std::vector<long long> oracle_weights(const Graph& g, const TotalLabeling& f) {
    return oracle::weights(oracle::raw(g), {f.vertex_labels.begin(), f.vertex_labels.end()},
                           {f.edge_labels.begin(), f.edge_labels.end()});
}

} // namespace

TEST(K2PlusEmpty, WeightsForSmallN) {
    EXPECT_EQ(weights_of(construct_k2_plus_empty(1)), (std::vector<Weight>{4, 5, 4}));
    EXPECT_EQ(weights_of(construct_k2_plus_empty(2)), (std::vector<Weight>{4, 5, 4, 5}));
    EXPECT_EQ(weights_of(construct_k2_plus_empty(3)), (std::vector<Weight>{4, 5, 4, 5, 6}));
    EXPECT_THROW(construct_k2_plus_empty(0), ParameterError);
}

TEST(K2PlusEmpty, DistinctCountIsMaxOfTwoAndN) {
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto lg = construct_k2_plus_empty(n);
        const auto r = verify_total(lg.graph, lg.labeling);
        ASSERT_TRUE(r.valid()) << n;
        EXPECT_EQ(r.profile.distinct_count, std::max<std::size_t>(2, n)) << n;
        EXPECT_EQ(oracle_weights(lg.graph, lg.labeling), std::vector<long long>(r.profile.weights.begin(), r.profile.weights.end()));
    }
}

TEST(OddPath, SequencesGiveTwoWeights) {
    EXPECT_EQ(weights_of(construct_small_odd_path(3)), (std::vector<Weight>{6, 12, 6}));
    EXPECT_EQ(weights_of(construct_small_odd_path(5)), (std::vector<Weight>{10, 19, 10, 19, 10}));
    EXPECT_EQ(weights_of(construct_small_odd_path(7)), (std::vector<Weight>{19, 20, 19, 20, 19, 20, 19}));
    for (std::size_t n : {3, 5, 7}) {
        const auto lg = construct_small_odd_path(n);
        const auto r = verify_total(lg.graph, lg.labeling);
        EXPECT_TRUE(r.valid());
        EXPECT_EQ(r.profile.distinct_count, 2u);
    }
}

TEST(OddPath, OtherLengthsPointToTheSolver) {
    for (std::size_t n : {1, 2, 4, 9}) {
        try {
            construct_small_odd_path(n);
            FAIL() << n;
        } catch (const ParameterError& e) {
            EXPECT_NE(std::string(e.what()).find("solver"), std::string::npos);
        }
    }
}

TEST(InterleavedPath, RoundTrip) {
    const std::vector<Label> seq{13, 6, 4, 10, 1, 8, 9, 3, 5, 11, 2, 7, 12};
    const auto f = from_interleaved_path(seq);
    EXPECT_EQ(f.vertex_labels, (std::vector<Label>{13, 4, 1, 9, 5, 2, 12}));
    EXPECT_EQ(to_interleaved_path(f), seq);
    EXPECT_THROW(from_interleaved_path(std::vector<Label>{1, 2}), ParameterError);
}

TEST(PathFromCycle, SolverFoundHexagonLabelling) {
    const Graph c6 = generate(family::Cycle{6});
    std::size_t checked = 0;
    SolveBudget budget;
    enumerate_labelings(c6, SearchMode::Total, 2, budget, [&](const AnyLabeling& lab) {
        const auto& f = std::get<TotalLabeling>(lab);
        const auto one = std::find(f.edge_labels.begin(), f.edge_labels.end(), 1);
        if (one == f.edge_labels.end()) return true;
        const auto res = path_from_cycle(c6, f, EdgeId{static_cast<std::size_t>(one - f.edge_labels.begin())});
        const auto r = verify_total(res.path, res.labeling);
        EXPECT_TRUE(r.valid());
        EXPECT_EQ(r.profile.distinct_count, 2u);
        const auto before = verify_total(c6, f).profile.weights;
        for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(r.profile.weights[i], before[res.cycle_vertex[i]] - 3);
        return ++checked < 10;
    });
    EXPECT_EQ(checked, 10u);
}

TEST(PathFromCycle, Preconditions) {
    const Graph c4 = generate(family::Cycle{4});
    const auto sol = find_with_at_most_k(c4, 2, SearchMode::Total, SolveBudget{});
    ASSERT_EQ(sol.status, FindStatus::Found);
    const auto f = std::get<TotalLabeling>(*sol.certificate);
    for (std::size_t e = 0; e < 4; ++e) {
        if (f.edge_labels[e] != 1) {
            EXPECT_THROW(path_from_cycle(c4, f, EdgeId{e}), PreconditionError);
        }
    }
    // w = (9, 11, 19, 19): v2 and v3 clash although edge 0 carries label 1
    EXPECT_THROW(path_from_cycle(c4, TotalLabeling{{2, 3, 4, 5}, {1, 6, 7, 8}}, EdgeId{0}), PreconditionError);
    EXPECT_THROW(path_from_cycle(generate(family::Path{4}), TotalLabeling{{1, 2, 3, 4}, {5, 6, 7}}, EdgeId{0}),
                 PreconditionError);
}
