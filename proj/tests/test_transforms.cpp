#include "lat/constructions.hpp"
#include "lat/families.hpp"
#include "lat/solver.hpp"
#include "lat/transforms.hpp"

#include <gtest/gtest.h>

using namespace lat;

namespace {

using Weights = std::vector<Weight>;
using Labels = std::vector<Label>;

// P_2 v O_2 on vertices b=0, c=1, u1=2, u2=3; canonical edges
// (0,1)=bc, (0,2)=u1b, (0,3)=u2b, (1,2)=u1c, (1,3)=u2c.
Graph double_cone_p2() { return join(generate(family::Path{2}), Graph(2)); }

} // namespace

TEST(ConeToTotal, TriangleDropsToPathTwo) {
    // C_3 = K_1 v P_2 with apex a = 2, b = 0, c = 1: g(ab)=1, g(ac)=3, g(bc)=2.
    const Graph c3 = generate(family::Cycle{3});
    const auto res = cone_to_total(c3, EdgeLabeling{{2, 1, 3}}, VertexId{2});
    EXPECT_EQ(res.graph, generate(family::Path{2}));
    EXPECT_EQ(res.labeling.vertex_labels, (Labels{1, 3}));
    EXPECT_EQ(res.labeling.edge_labels, (Labels{2}));
    EXPECT_EQ(verify_total(res.graph, res.labeling).profile.weights, (Weights{3, 5}));
}

TEST(ConeToTotal, EveryValidK4LabellingGivesThreeWeightTriangle) {
    const Graph k4 = generate(family::Complete{4});
    std::size_t seen = 0;
    enumerate_labelings(k4, SearchMode::EdgeOnly, 4, SolveBudget{}, [&](const AnyLabeling& lab) {
        const auto& g = std::get<EdgeLabeling>(lab);
        const auto plus = verify_edge(k4, g).profile.weights;
        for (std::size_t apex = 0; apex < 4; ++apex) {
            const auto res = cone_to_total(k4, g, VertexId{apex});
            const auto r = verify_total(res.graph, res.labeling);
            EXPECT_TRUE(r.valid());
            EXPECT_EQ(r.profile.distinct_count, 3u);
            for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.profile.weights[i], plus[res.cone_vertex[i]]);
        }
        ++seen;
        return true;
    });
    EXPECT_GT(seen, 0u);
}

TEST(ConeToTotal, Errors) {
    const Graph c4 = generate(family::Cycle{4});
    EXPECT_THROW(cone_to_total(c4, EdgeLabeling{{1, 2, 3, 4}}, VertexId{0}), StructureError);
    const Graph c3 = generate(family::Cycle{3});
    EXPECT_THROW(cone_to_total(c3, EdgeLabeling{{1, 2, 3}}, VertexId{5}), StructureError);
    EXPECT_THROW(cone_to_total(c3, EdgeLabeling{{1, 1, 2}}, VertexId{0}), PreconditionError);
    // K_1 v O_2 is P_3 with the apex in the middle; labels (1, 2) give g+ = (1, 2, 3).
    const Graph star = join(Graph(2), Graph(1));
    EXPECT_NO_THROW(cone_to_total(star, EdgeLabeling{{1, 2}}, VertexId{2}));
    // duplicate label
    EXPECT_THROW(cone_to_total(star, EdgeLabeling{{2, 2}}, VertexId{2}), PreconditionError);
}

TEST(TotalToCone, PathTwoBecomesTriangle) {
    const auto res = total_to_cone(generate(family::Path{2}), TotalLabeling{{1, 3}, {2}});
    EXPECT_EQ(res.cone, generate(family::Complete{3}));
    EXPECT_EQ(res.apex.value, 2u);
    EXPECT_EQ(res.apex_weight, 4);
    // (0,1)=bc=2, (0,2)=ub=1, (1,2)=uc=3
    EXPECT_EQ(res.labeling.edge_labels, (Labels{2, 1, 3}));
    const auto r = verify_edge(res.cone, res.labeling);
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.profile.weights, (Weights{3, 5, 4}));
    EXPECT_EQ(r.profile.distinct_count, 3u);
}

TEST(TotalToCone, PathThreeSequenceCollides) {
    const auto lg = construct_small_odd_path(3);  // S = 1 + 3 + 2 = 6 = w(v1)
    try {
        total_to_cone(lg.graph, lg.labeling);
        FAIL();
    } catch (const PreconditionError& e) {
        ASSERT_TRUE(e.vertex().has_value());
        EXPECT_EQ(*e.vertex(), 0u);
        EXPECT_NE(std::string(e.what()).find("6"), std::string::npos);
    }
}

TEST(TotalToCone, EmptyPairBecomesStar) {
    const auto res = total_to_cone(Graph(2), TotalLabeling{{1, 2}, {}});
    EXPECT_EQ(res.apex_weight, 3);
    const auto r = verify_edge(res.cone, res.labeling);
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.profile.weights, (Weights{1, 2, 3}));
    EXPECT_EQ(r.profile.distinct_count, 3u);
}

TEST(TotalToCone, RejectsInvalidInput) {
    EXPECT_THROW(total_to_cone(generate(family::Path{3}), TotalLabeling{{5, 2, 4}, {1, 3}}), PreconditionError);
}

TEST(DoubleCone, CollapseOfPathTwo) {
    const Graph dc = double_cone_p2();
    const EdgeLabeling g{{5, 1, 2, 3, 4}};
    EXPECT_EQ(verify_edge(dc, g).profile.weights, (Weights{8, 12, 4, 6}));

    const auto res = double_cone_collapse(dc, g, {VertexId{2}, VertexId{3}});
    EXPECT_EQ(res.graph, generate(family::Complete{3}));
    EXPECT_EQ(res.labeling.vertex_labels, (Labels{2, 4, 6}));
    EXPECT_EQ(res.labeling.edge_labels, (Labels{5, 1, 3}));
    const auto r = verify_total(res.graph, res.labeling);
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.profile.weights, (Weights{8, 12, 10}));
    EXPECT_EQ(res.kept_apex.value, 2u);
    EXPECT_EQ(res.consumed_apex.value, 3u);
}

TEST(DoubleCone, CollisionIsReported) {
    // (u1b, u1c) = (1, 2), u2b = 3: g+(u1) = 3 and 2p+q+1+3 = 9 = g+(b).
    const EdgeLabeling g{{5, 1, 3, 2, 4}};
    try {
        double_cone_collapse(double_cone_p2(), g, {VertexId{2}, VertexId{3}});
        FAIL();
    } catch (const PreconditionError& e) {
        ASSERT_TRUE(e.vertex().has_value());
        EXPECT_EQ(*e.vertex(), 0u);
    }
}

TEST(DoubleCone, StructureChecks) {
    const Graph dc = double_cone_p2();
    const EdgeLabeling g{{5, 1, 2, 3, 4}};
    EXPECT_THROW(double_cone_collapse(dc, g, {VertexId{0}, VertexId{3}}), StructureError);  // 0 and 3 adjacent
    EXPECT_THROW(double_cone_collapse(dc, g, {VertexId{2}, VertexId{2}}), StructureError);
    EXPECT_THROW(double_cone_collapse(dc, EdgeLabeling{{1, 2, 3, 4, 4}}, {VertexId{2}, VertexId{3}}), PreconditionError);
}

TEST(DoubleCone, CycleFourGivesWheel) {
    const Graph dc = generate(family::CycleJoinEmpty{4, 2});
    const auto sol = solve_min_distinct(dc, SearchMode::EdgeOnly, SolveBudget{});
    ASSERT_EQ(sol.status, SolveStatus::Exact);
    const auto& g = std::get<EdgeLabeling>(*sol.certificate);
    bool done = false;
    for (const auto& [a, b] : {std::pair{4, 5}, std::pair{5, 4}}) {
        try {
            const auto res = double_cone_collapse(dc, g, {VertexId{std::size_t(a)}, VertexId{std::size_t(b)}});
            EXPECT_EQ(res.graph, generate(family::Wheel{4}));
            auto labels = all_labels(res.labeling);
            std::sort(labels.begin(), labels.end());
            for (std::size_t i = 0; i < labels.size(); ++i) EXPECT_EQ(labels[i], Label(i + 1));
            EXPECT_EQ(labels.size(), 13u);
            EXPECT_TRUE(verify_total(res.graph, res.labeling).valid());
            done = true;
        } catch (const PreconditionError&) {
        }
    }
    EXPECT_TRUE(done);
}
