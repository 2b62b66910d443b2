#include "lat/cache.hpp"
#include "lat/certificate.hpp"
#include "lat/constructions.hpp"

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

using namespace lat;

namespace {

Certificate p3_certificate() {
    const auto lg = construct_small_odd_path(3);
    return make_certificate(lg.graph, lg.labeling, make_provenance("construction:odd-path"));
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("lat-test-" + name + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST(Certificate, WritesPathThreeDocument) {
    const Json j = Json::parse(write_certificate(p3_certificate()));
    EXPECT_EQ(j["graph"]["p"], 3);
    EXPECT_EQ(j["graph"]["edges"], Json::parse("[[0,1],[1,2]]"));
    EXPECT_EQ(j["mode"], "total");
    EXPECT_EQ(j["labels"]["vertex_labels"], Json::parse("[1,3,2]"));
    EXPECT_EQ(j["labels"]["edge_labels"], Json::parse("[5,4]"));
    EXPECT_EQ(j["weights"], Json::parse("[6,12,6]"));
    EXPECT_EQ(j["distinct_count"], 2);
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["provenance"]["source"], "construction:odd-path");
}

TEST(Certificate, RoundTrip) {
    const auto c = p3_certificate();
    EXPECT_EQ(read_certificate(write_certificate(c)), c);
    Certificate edge = make_certificate(generate(family::Cycle{3}), EdgeLabeling{{1, 3, 2}}, make_provenance("test"));
    edge.citation = "cycles";
    edge.extra["note"] = "kept";
    EXPECT_EQ(read_certificate(write_certificate(edge)), edge);
}

TEST(Certificate, DuplicateLabelIsIntegrityError) {
    Json j = to_json(p3_certificate());
    j["labels"]["edge_labels"] = Json::parse("[3,4]");
    EXPECT_THROW(read_certificate(j.dump()), IntegrityError);
    EXPECT_NO_THROW(parse_certificate(j.dump()));
}

TEST(Certificate, TamperedClaimsAreIntegrityErrors) {
    Json j = to_json(p3_certificate());
    j["distinct_count"] = 1;
    EXPECT_THROW(read_certificate(j.dump()), IntegrityError);
    j = to_json(p3_certificate());
    j["weights"] = Json::parse("[6,12,7]");
    EXPECT_THROW(read_certificate(j.dump()), IntegrityError);
    j = to_json(p3_certificate());
    j["valid"] = false;
    EXPECT_THROW(read_certificate(j.dump()), IntegrityError);
}

TEST(Certificate, InvalidLabellingCanBeRecordedHonestly) {
    const auto c = make_certificate(generate(family::Path{3}), TotalLabeling{{5, 2, 4}, {1, 3}}, make_provenance("test"));
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(read_certificate(write_certificate(c)), c);
}

TEST(Certificate, SchemaErrorsNameTheField) {
    const auto expect_path = [](const Json& j, const std::string& path) {
        try {
            parse_certificate(j.dump());
            FAIL() << path;
        } catch (const SchemaError& e) {
            EXPECT_EQ(e.path(), path);
        }
    };
    Json j = to_json(p3_certificate());
    j.erase("weights");
    expect_path(j, "weights");
    j = to_json(p3_certificate());
    j["graph"]["edges"][1] = Json::parse("[1,\"x\"]");
    expect_path(j, "graph.edges[1][1]");
    j = to_json(p3_certificate());
    j["graph"]["edges"] = Json::parse("[[1,2],[0,1]]");
    expect_path(j, "graph.edges[1]");
    j = to_json(p3_certificate());
    j["mode"] = "vertex";
    expect_path(j, "mode");
    j = to_json(p3_certificate());
    j["labels"]["vertex_labels"] = Json::parse("[1,3]");
    expect_path(j, "labels.vertex_labels");
    j = to_json(p3_certificate());
    j["provenance"] = Json::object();
    expect_path(j, "provenance.source");
    EXPECT_THROW(parse_certificate("{not json"), SchemaError);
}

TEST(Dot, PathTwoAnnotations) {
    const auto c = make_certificate(generate(family::Path{2}), TotalLabeling{{1, 3}, {2}}, make_provenance("test"));
    const std::string dot = export_dot(c);
    EXPECT_NE(dot.find("v0 [label=\"v0 [1/3]\"];"), std::string::npos) << dot;
    EXPECT_NE(dot.find("v1 [label=\"v1 [3/5]\"];"), std::string::npos) << dot;
    EXPECT_NE(dot.find("v0 -- v1 [label=\"2\"];"), std::string::npos) << dot;
    EXPECT_EQ(dot, export_dot(c));
}

TEST(Dot, EmptyGraphAndEdgeMode) {
    const auto o2 = make_certificate(Graph(2), TotalLabeling{{1, 2}, {}}, make_provenance("test"));
    const std::string dot = export_dot(o2);
    EXPECT_NE(dot.find("v0 [label=\"v0 [1/1]\"]"), std::string::npos);
    EXPECT_NE(dot.find("v1 [label=\"v1 [2/2]\"]"), std::string::npos);
    EXPECT_EQ(dot.find("--"), std::string::npos);

    const auto tri = make_certificate(generate(family::Cycle{3}), EdgeLabeling{{1, 3, 2}}, make_provenance("test"));
    const std::string edot = export_dot(tri);
    EXPECT_NE(edot.find("v0 [label=\"v0 [4]\"]"), std::string::npos) << edot;
    EXPECT_EQ(edot.find("/"), std::string::npos);
}

TEST(Cache, StoresAndServesExactResults) {
    const auto dir = fresh_dir("store");
    ResultCache cache(dir);
    const Graph g = generate(family::Cycle{4});
    EXPECT_FALSE(cache.lookup(g, SearchMode::Total));
    const auto r = solve_min_distinct(g, SearchMode::Total, SolveBudget{});
    cache.store(g, SearchMode::Total, r);
    const auto hit = cache.lookup(g, SearchMode::Total);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->value, 2u);
    EXPECT_TRUE(reverify(hit->certificate).valid());
    EXPECT_FALSE(cache.lookup(g, SearchMode::EdgeOnly));
    std::filesystem::remove_all(dir);
}

TEST(Cache, IgnoresNonExactResults) {
    const auto dir = fresh_dir("inexact");
    ResultCache cache(dir);
    const Graph g = generate(family::Wheel{6});
    SolveBudget tiny;
    tiny.max_nodes = 3;
    tiny.max_millis.reset();
    const auto r = solve_min_distinct(g, SearchMode::Total, tiny);
    ASSERT_NE(r.status, SolveStatus::Exact);
    cache.store(g, SearchMode::Total, r);
    EXPECT_FALSE(cache.lookup(g, SearchMode::Total));
    std::filesystem::remove_all(dir);
}

TEST(Cache, TamperedEntryIsDiscarded) {
    const auto dir = fresh_dir("tamper");
    ResultCache cache(dir);
    const Graph g = generate(family::Cycle{4});
    cache.store(g, SearchMode::Total, solve_min_distinct(g, SearchMode::Total, SolveBudget{}));
    const auto path = cache.path_for(g, SearchMode::Total);
    Json j;
    {
        std::ifstream in(path);
        in >> j;
    }
    auto labels = j["certificate"]["labels"]["edge_labels"];
    j["certificate"]["labels"]["edge_labels"][0] = labels[1];  // duplicate a label
    std::ofstream(path) << j.dump();
    EXPECT_FALSE(cache.lookup(g, SearchMode::Total));
    EXPECT_EQ(cache.discarded(), 1u);
    EXPECT_FALSE(std::filesystem::exists(path));

    cache.store(g, SearchMode::Total, solve_min_distinct(g, SearchMode::Total, SolveBudget{}));
    {
        std::ifstream in(path);
        in >> j;
    }
    j["value"] = 1;  // claim disagrees with the certificate
    std::ofstream(path) << j.dump();
    EXPECT_FALSE(cache.lookup(g, SearchMode::Total));
    std::filesystem::remove_all(dir);
}

TEST(PrettyJson, ScalarArraysStayOnOneLine) {
    const std::string text = write_certificate(p3_certificate());
    EXPECT_NE(text.find("\"edges\": [[0, 1], [1, 2]]"), std::string::npos) << text;
    EXPECT_NE(text.find("\"vertex_labels\": [1, 3, 2]"), std::string::npos) << text;
    const Json tricky = Json::parse(R"({"a": ["x, y", "z"], "b": {}, "c": [], "d": [{"e": [1, [2, 3]]}], "f": null})");
    EXPECT_EQ(Json::parse(pretty_json(tricky)), tricky);
}
