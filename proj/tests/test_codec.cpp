#include "lat/families.hpp"
#include "lat/graph_codec.hpp"

#include <gtest/gtest.h>

using namespace lat;

TEST(EdgeList, ParsesTriangle) {
    const Graph g = parse_edge_list("0 1\n1 2\n2 0");
    EXPECT_EQ(g, generate(family::Cycle{3}));
}

TEST(EdgeList, SerialisesCanonically) {
    EXPECT_EQ(serialize_edge_list(parse_edge_list("0 1\n1 2\n2 0")), "0 1\n0 2\n1 2");
}

TEST(EdgeList, DeclaredOrderKeepsIsolatedVertices) {
    const Graph g = generate(family::K2PlusEmpty{2});
    const std::string text = serialize_edge_list(g);
    EXPECT_EQ(text, "p=4\n0 1");
    EXPECT_EQ(parse_edge_list(text), g);
    EXPECT_EQ(parse_edge_list("# comment\n\np=3\n"), Graph(3));
}

TEST(EdgeList, ErrorsCarryOffsets) {
    try {
        parse_edge_list("0 1\n1 x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 6u);
    }
    EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("p=2\n0 2\n"), ValidationError);
    EXPECT_THROW(parse_edge_list("0 0\n"), ValidationError);
}

TEST(Graph6, TriangleIsBw) {
    EXPECT_EQ(parse_graph6("Bw"), generate(family::Complete{3}));
    EXPECT_EQ(serialize_graph6(generate(family::Complete{3})), "Bw");
    EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), generate(family::Complete{3}));
}

TEST(Graph6, KnownEncodings) {
    // Reference strings cross-checked against networkx.to_graph6_bytes.
    EXPECT_EQ(serialize_graph6(Graph(0)), "?");
    EXPECT_EQ(serialize_graph6(Graph(1)), "@");
    EXPECT_EQ(serialize_graph6(Graph(2, {{0, 1}})), "A_");
    EXPECT_EQ(serialize_graph6(generate(family::Complete{4})), "C~");
    EXPECT_EQ(serialize_graph6(generate(family::Cycle{4})), "Cl");
    EXPECT_EQ(serialize_graph6(generate(family::Cycle{70})),
              "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@_??????????G");
}

TEST(Graph6, RejectsMalformed) {
    EXPECT_THROW(parse_graph6("B"), ParseError);      // missing body
    EXPECT_THROW(parse_graph6("Bx"), ParseError);     // padding bit set
    EXPECT_THROW(parse_graph6("B\x7f"), ParseError);  // byte out of range
    EXPECT_THROW(parse_graph6("Bww"), ParseError);    // trailing data
}

TEST(Graph6, RoundTripsFamiliesAndLargeOrders) {
    const FamilySpec specs[] = {family::Cycle{5}, family::Wheel{6}, family::Fan{7}, family::Path{9},
                                family::CompleteBipartite{3, 4}, family::K2PlusEmpty{5}, family::JoinCompleteCycle{3, 5},
                                family::CycleJoinEmpty{5, 2}, family::Empty{4}, family::Complete{7}, family::Cycle{70}};
    for (const auto& s : specs) {
        const Graph g = generate(s);
        EXPECT_EQ(parse_graph6(serialize_graph6(g)), g) << to_string(s);
        EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g) << to_string(s);
    }
}

TEST(Codec, DetectsFormat) {
    EXPECT_EQ(detect_format("Bw"), GraphFormat::Graph6);
    EXPECT_EQ(detect_format(">>graph6<<Bw"), GraphFormat::Graph6);
    EXPECT_EQ(detect_format("0 1\n"), GraphFormat::EdgeList);
    EXPECT_EQ(detect_format("p=3\n"), GraphFormat::EdgeList);
}
