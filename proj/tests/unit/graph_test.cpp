#include "swapedge/graph.hpp"

#include <gtest/gtest.h>

#include "swapedge/generators.hpp"
#include "test_graphs.hpp"

namespace swapedge {
namespace {

GraphErrorKind parse_error_kind(std::string_view text, std::size_t* line = nullptr) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return GraphErrorKind::kMalformedHeader;
}

TEST(ParseGraph, Triangle) {
  const Graph g = parse_graph("3 3 0\n0 1 1\n1 2 1\n0 2 1");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.source(), 0u);
  EXPECT_EQ(g.edge(2), (Edge{0, 2, 1}));
}

TEST(ParseGraph, PathWithBridgeIsAccepted) {
  const Graph g = parse_graph("2 1 0\n0 1 5\n");
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(find_bridges(g), std::vector<EdgeId>{0});
}

TEST(ParseGraph, ParallelEdgesCollapseToMinimum) {
  const Graph g = parse_graph("3 3 0\n0 1 7\n1 2 2\n1 0 3\n");
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 3}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2, 2}));
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = parse_graph("# header follows\n\n3 2 1\n  # edge list\n0 1 4\n\n1 2 4\n");
  EXPECT_EQ(g.source(), 1u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseGraph, DistinctErrorsNameTheLine) {
  std::size_t line = 0;
  EXPECT_EQ(parse_error_kind("3 3\n", &line), GraphErrorKind::kMalformedHeader);
  EXPECT_EQ(line, 1u);
  EXPECT_EQ(parse_error_kind("3 2 0\n0 1 1\n1 x 1\n", &line), GraphErrorKind::kMalformedEdge);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_error_kind("3 2 0\n0 1 -4\n1 2 1\n", &line), GraphErrorKind::kNegativeWeight);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(parse_error_kind("3 2 0\n0 1 1\n1 3 1\n", &line), GraphErrorKind::kVertexOutOfRange);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_error_kind("3 2 0\n#c\n1 1 1\n1 2 1\n", &line), GraphErrorKind::kSelfLoop);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_error_kind("4 2 0\n0 1 1\n2 3 1\n"), GraphErrorKind::kDisconnected);
  EXPECT_EQ(parse_error_kind("3 3 0\n0 1 1\n1 2 1\n"), GraphErrorKind::kEdgeCountMismatch);
  EXPECT_EQ(parse_error_kind("3 1 0\n0 1 1\n1 2 1\n", &line), GraphErrorKind::kEdgeCountMismatch);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_error_kind("3 2 5\n0 1 1\n1 2 1\n"), GraphErrorKind::kInvalidSource);
  EXPECT_EQ(parse_error_kind("3 2 0\n0 1 4294967296\n1 2 1\n"), GraphErrorKind::kWeightOverflow);
  EXPECT_EQ(parse_error_kind(""), GraphErrorKind::kMalformedHeader);
}

TEST(ParseGraph, RenderRoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = generate_random_2ec(5 + seed, 5 + 2 * seed, 50, seed);
    const std::string text = render_graph(g);
    const Graph back = parse_graph(text);
    EXPECT_EQ(back, canonicalize(g));
    EXPECT_EQ(render_graph(back), text);
  }
}

TEST(RenderGraph, SortsEdgesByEndpoints) {
  const Graph g(3, 0, {{2, 1, 5}, {0, 2, 1}, {1, 0, 3}});
  EXPECT_EQ(render_graph(g), "3 3 0\n0 1 3\n0 2 1\n1 2 5\n");
}

TEST(FindBridges, SmallCases) {
  EXPECT_TRUE(find_bridges(testing::triangle()).empty());
  EXPECT_EQ(find_bridges(testing::path3()), (std::vector<EdgeId>{0, 1}));
  EXPECT_TRUE(find_bridges(generate_gadget_a()).empty());
}

TEST(FindBridges, MatchesExhaustiveRemoval) {
  // Sparse random connected graphs (a cycle plus pendant trees) have both
  // kinds of edges.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph core = generate_random_2ec(6, 7, 9, seed);
    std::vector<Edge> edges(core.edges().begin(), core.edges().end());
    for (Vertex v = 6; v < 10; ++v)
      edges.push_back({v, static_cast<Vertex>((seed * 7 + v) % v), 1});
    const Graph g(10, 0, edges);
    std::vector<EdgeId> expected;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      if (!testing::connected_without(g, id)) expected.push_back(id);
    }
    EXPECT_EQ(find_bridges(g), expected) << "seed " << seed;
  }
}

TEST(Dijkstra, Triangle) {
  const auto sp = dijkstra(testing::triangle(), 0);
  EXPECT_EQ(sp.dist, (std::vector<Length>{0, 1, 1}));
}

TEST(Dijkstra, GadgetAWithoutFirstEdge) {
  const Graph g = generate_gadget_a();
  const auto id = g.find_edge(0, 1);
  ASSERT_TRUE(id);
  const auto sp = dijkstra(g, 0, id);
  EXPECT_EQ(sp.dist, (std::vector<Length>{0, 10, 6, 8, 1}));
  EXPECT_EQ(sp.dist, testing::enumerate_distances(g, 0, id));
}

TEST(Dijkstra, BridgeRemovalLeavesInfinity) {
  const auto sp = dijkstra(testing::path3(), 0, EdgeId{1});
  EXPECT_EQ(sp.dist[1], 1u);
  EXPECT_EQ(sp.dist[2], kInfinity);
  EXPECT_FALSE(sp.parent[2]);
}

TEST(Dijkstra, TieKeepsSmallerParent) {
  // 3 is reachable at distance 2 through 1 and through 2.
  const Graph g(4, 0, {{0, 2, 1}, {0, 1, 1}, {2, 3, 1}, {1, 3, 1}});
  const auto sp = dijkstra(g, 0);
  ASSERT_TRUE(sp.parent[3]);
  EXPECT_EQ(g.edge(*sp.parent[3]).other(3), 1u);
}

TEST(Dijkstra, PropertiesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_random_2ec(8, 12, 20, seed);
    const auto base = dijkstra(g, 0).dist;
    EXPECT_EQ(base, testing::enumerate_distances(g, 0));
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const auto from_u = dijkstra(g, u).dist;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(from_u[v], dijkstra(g, v).dist[u]);
      }
    }
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const auto without = dijkstra(g, 0, id).dist;
      for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_GE(without[v], base[v]);
    }
  }
}

TEST(Graph, WeightCap) {
  EXPECT_NO_THROW(Graph(3, 0, {{0, 1, kMaxWeight}, {1, 2, 1}}));
  EXPECT_THROW(Graph(3, 0, {{0, 1, kMaxWeight + 1}, {1, 2, 1}}), GraphError);
}

}  // namespace
}  // namespace swapedge
