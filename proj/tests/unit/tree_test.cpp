#include "swapedge/tree.hpp"

#include <gtest/gtest.h>

#include "swapedge/generators.hpp"
#include "test_graphs.hpp"

namespace swapedge {
namespace {

std::vector<Vertex> sorted(std::span<const Vertex> vs) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(BuildSpt, GadgetA) {
  const Spt t = build_spt(generate_gadget_a());
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(t.dist(v), (std::vector<Length>{0, 1, 5, 7, 1})[v]);
  ASSERT_EQ(t.tree_edges().size(), 4u);
  // Index order is the preorder of the child: 1, 2, 3, 4.
  EXPECT_EQ(t.tree_edges()[0].child, 1u);
  EXPECT_EQ(t.tree_edges()[1].child, 2u);
  EXPECT_EQ(t.tree_edges()[2].child, 3u);
  EXPECT_EQ(t.tree_edges()[3].child, 4u);
  EXPECT_EQ(t.tree_edges()[3].parent, 0u);
}

TEST(BuildSpt, UnitTriangle) {
  const Spt t = build_spt(testing::triangle());
  using P = std::pair<Vertex, Vertex>;
  EXPECT_EQ(testing::tree_edge_pairs(t), (std::vector<P>{{0, 1}, {0, 2}}));
}

TEST(BuildSpt, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = generate_random_2ec(10 + seed, 20 + 2 * seed, 100, seed);
    const Spt t = build_spt(g);
    const auto sp = dijkstra(g, g.source());
    std::vector<std::uint32_t> child_sum(g.vertex_count(), 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(t.dist(v), sp.dist[v]);
      if (t.parent(v) != kNoVertex) child_sum[t.parent(v)] += t.subtree_size(v);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(child_sum[v], t.subtree_size(v));
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        bool below = false;
        for (Vertex a = u; a != kNoVertex; a = t.parent(a)) below = below || a == v;
        EXPECT_EQ(t.in_subtree(u, v), below);
      }
    }
  }
}

TEST(TreeDistance, GadgetA) {
  const Spt t = build_spt(generate_gadget_a());
  EXPECT_EQ(tree_distance(t, 2, 3), 10u);
  EXPECT_EQ(tree_distance(t, 3, 3), 0u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(tree_distance(t, 0, v), t.dist(v));
}

TEST(TreeDistance, MatchesExplicitPathWalk) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_random_2ec(64, 100, 1000, seed);
    const Spt t = build_spt(g);
    for (Vertex u = 0; u < 64; ++u) {
      for (Vertex v = 0; v < 64; ++v) {
        ASSERT_EQ(tree_distance(t, u, v), testing::walk_tree_distance(t, u, v));
      }
    }
  }
}

TEST(DetachedSet, GadgetA) {
  const Spt t = build_spt(generate_gadget_a());
  EXPECT_EQ(sorted(detached_set(t, 0, 1).vertices()), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(sorted(detached_set(t, 1, 2).vertices()), (std::vector<Vertex>{2}));
  EXPECT_THROW(detached_set(t, 4, 2), std::invalid_argument);
  EXPECT_THROW(detached_set(t, 1, 0), std::invalid_argument);
}

TEST(DetachedSet, PathGraphRootEdge) {
  const Graph g(4, 0, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const Spt t = build_spt(g);
  EXPECT_EQ(sorted(detached_set(t, 0, 1).vertices()), (std::vector<Vertex>{1, 2, 3}));
}

TEST(DetachedSet, MembershipFollowsRootPaths) {
  const Graph g = generate_random_2ec(40, 80, 50, 11);
  const Spt t = build_spt(g);
  for (const TreeEdge& e : t.tree_edges()) {
    const SubtreeSlice u = detached_set(t, e);
    for (Vertex v = 0; v < 40; ++v) {
      bool through_b = false;
      for (Vertex a = v; a != kNoVertex; a = t.parent(a)) through_b = through_b || a == e.child;
      EXPECT_EQ(u.contains(t, v), through_b);
    }
  }
}

TEST(SubtreeSlice, RejectsDisconnectedSets) {
  const Spt t = build_spt(generate_gadget_a());
  EXPECT_THROW(SubtreeSlice(t, {}), std::invalid_argument);
  EXPECT_THROW(SubtreeSlice(t, {2, 3}), std::invalid_argument);
  EXPECT_THROW(SubtreeSlice(t, {1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(SubtreeSlice(t, {3, 1, 2}));
}

TEST(FindCentroid, SmallCases) {
  const Graph path(3, 0, {{0, 1, 1}, {1, 2, 1}});
  const Spt pt = build_spt(path);
  EXPECT_EQ(find_centroid(pt, SubtreeSlice(pt, {0, 1, 2})), 1u);
  EXPECT_EQ(find_centroid(pt, SubtreeSlice(pt, {2})), 2u);

  const Spt t = build_spt(generate_gadget_a());
  EXPECT_EQ(find_centroid(t, SubtreeSlice(t, {1, 2, 3})), 1u);
  // Two-vertex slice: both qualify, smaller id wins.
  EXPECT_EQ(find_centroid(t, SubtreeSlice(t, {1, 3})), 1u);
}

// Exhaustive check: the returned vertex satisfies the half bound and is the
// smallest id that does.
TEST(FindCentroid, HalfBoundOnAllSubtrees) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = generate_random_2ec(30, 36, 10, seed);
    const Spt t = build_spt(g);
    for (Vertex r = 0; r < 30; ++r) {
      const auto sub = t.subtree(r);
      const SubtreeSlice lam(t, std::vector<Vertex>(sub.begin(), sub.end()));
      const Vertex c = find_centroid(t, lam);
      auto largest_without = [&](Vertex cut) {
        std::size_t largest = 0;
        for (const Vertex child : t.children(cut)) {
          largest = std::max<std::size_t>(largest, t.subtree_size(child));
        }
        if (cut != r) largest = std::max<std::size_t>(largest, sub.size() - t.subtree_size(cut));
        return largest;
      };
      EXPECT_LE(2 * largest_without(c), sub.size());
      for (const Vertex v : sub) {
        if (v < c) EXPECT_GT(2 * largest_without(v), sub.size());
      }
    }
  }
}

}  // namespace
}  // namespace swapedge
