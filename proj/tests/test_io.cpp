#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace egd;

namespace {

std::size_t line_of(const std::string &text) {
  try {
    parse_edge_list(text);
  } catch (const InputError &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST(EdgeList, RoundTrip) {
  Graph g = gen_gnp(20, 0.3, 5);
  Graph h = parse_edge_list(to_edge_list(g));
  EXPECT_EQ(h.n(), g.n());
  EXPECT_EQ(h.edge_pairs(), g.edge_pairs());
  EXPECT_EQ(h.fingerprint(), g.fingerprint());
}

TEST(EdgeList, CommentsAndBlankLines) {
  Graph g = parse_edge_list("# triangle\n\n3 3\n0 1  # first\n1 2\n\n2 0\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
}

TEST(EdgeList, Edgeless) {
  Graph g = parse_edge_list("4 0\n");
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 0u);
}

TEST(EdgeList, ErrorsCiteLine) {
  EXPECT_EQ(line_of("3 2\n0 1\na b\n"), 3u);
  EXPECT_EQ(line_of("3 1\n0 0\n"), 2u);
  EXPECT_EQ(line_of("3 2\n0 1\n1 0\n"), 3u);
  EXPECT_EQ(line_of("3 1\n0 7\n"), 2u);
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1 2\n"), 2u);
  EXPECT_THROW(parse_edge_list(""), InputError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), InputError);
  EXPECT_THROW(parse_edge_list("-3 0\n"), InputError);
}

TEST(DecompositionJson, ShapeAndValidation) {
  Graph g = th::complete_graph(4);
  Decomposition d;
  d.source = g.fingerprint();
  d.cycles.push_back(cycle_from_vertices(g, {0, 1, 2}));
  for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 3}, {2, 3}})
    d.single_edges.push_back(*g.find_edge(a, b));
  json j = decomposition_to_json(g, d);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["m"], 6);
  EXPECT_EQ(j["cycles"].size(), 1u);
  EXPECT_EQ(j["edges"].size(), 3u);
  EXPECT_EQ(j["stats"]["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["stats"]["pieces"], 4);

  EXPECT_TRUE(validate_decomposition_json(j, &g).ok);
  EXPECT_TRUE(validate_decomposition_json(j, nullptr).ok);

  json broken = j;
  broken["edges"].erase(broken["edges"].begin());
  EXPECT_FALSE(validate_decomposition_json(broken, &g).ok);
  EXPECT_FALSE(validate_decomposition_json(broken, nullptr).ok);

  json dup = j;
  dup["edges"].push_back({0, 1});
  EXPECT_FALSE(validate_decomposition_json(dup, nullptr).ok);

  Graph other = th::cycle_graph(4);
  EXPECT_THROW(validate_decomposition_json(j, &other), InputError);
  EXPECT_THROW(validate_decomposition_json(json::object(), nullptr), InputError);
}

TEST(DecompositionJson, SerialisationIsStable) {
  Graph g = gen_gnp(12, 0.5, 3);
  Decomposition d;
  d.source = g.fingerprint();
  for (EdgeId e = 0; e < g.m(); ++e)
    d.single_edges.push_back(e);
  EXPECT_EQ(decomposition_to_json(g, d).dump(), decomposition_to_json(g, d).dump());
}

TEST(Dot, MentionsEveryEdge) {
  Graph g = th::cycle_graph(3);
  Decomposition d;
  d.source = g.fingerprint();
  d.cycles.push_back(cycle_from_vertices(g, {0, 1, 2}));
  std::string dot = to_dot(g, &d);
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 2"), std::string::npos);
}
