#include "swapedge/gse.hpp"

#include <gtest/gtest.h>

#include "swapedge/generators.hpp"
#include "test_graphs.hpp"

namespace swapedge {
namespace {

using testing::tree_edge;

TEST(GoodSwapEdge, GadgetA) {
  const Graph g = generate_gadget_a();
  const Spt t = build_spt(g);
  const auto fast = solve_gse_fast(g, t);
  ASSERT_EQ(fast.size(), 4u);
  const auto& e01 = fast[t.tree_edge_index(1)];
  ASSERT_TRUE(e01);
  EXPECT_EQ(e01->x, 4u);
  EXPECT_EQ(e01->y, 2u);
  EXPECT_EQ(e01->key, 6u);
  const auto& e04 = fast[t.tree_edge_index(4)];
  EXPECT_EQ(e04->x, 2u);
  EXPECT_EQ(e04->y, 4u);
  EXPECT_EQ(e04->key, 10u);
}

TEST(GoodSwapEdge, GseFamily) {
  using L = LbGseLayout;
  const Graph g = generate_lb_gse(1000, 1);
  const Spt t = build_spt(g);
  const FailureContext ctx = build_context(g, t, tree_edge(t, L::a, L::b));
  const auto good = gse_for_edge(ctx);
  ASSERT_TRUE(good);
  EXPECT_EQ(good->x, L::source);
  EXPECT_EQ(good->y, L::y);
  EXPECT_EQ(good->key, 1000u);

  const GseRecord r = evaluate_gse_edge(ctx, good);
  EXPECT_EQ(*r.mu_good, StretchValue(3000, 1001));
  EXPECT_EQ(*r.mu_best, StretchValue(2001, 1000));
  EXPECT_EQ(r.best->y, L::b);
  mpq_class expected(3000 * 1000, 1001 * 2001);
  expected.canonicalize();
  EXPECT_EQ(*r.ratio, expected);
}

TEST(GoodSwapEdge, MaxStretchFamily) {
  const LbMsLayout at{10};
  const Graph g = generate_lb_ms(1000, 1, 10);
  const Spt t = build_spt(g);
  const auto fast = solve_gse_fast(g, t);
  const auto& e = fast[t.tree_edge_index(at.b)];
  ASSERT_TRUE(e);
  EXPECT_EQ(e->x, at.x);
  EXPECT_EQ(e->y, at.leaf(1));
  EXPECT_EQ(e->key, 1001u);
}

TEST(GoodSwapEdge, BridgesStayUnlabeled) {
  // Triangle 0-1-2 with a pendant path 2-3-4.
  const Graph g(5, 0, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  const Spt t = build_spt(g);
  const auto fast = solve_gse_fast(g, t);
  for (const TreeEdge& e : t.tree_edges()) {
    const bool bridge = e.child >= 3;
    EXPECT_EQ(fast[t.tree_edge_index(e.child)].has_value(), !bridge);
  }
}

// The sweep and the per-context minimum must pick the same edge, and that
// edge must carry the smallest key among all edges crossing the cut.
TEST(GoodSwapEdge, SweepMatchesPerContextMinimum) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 5 + seed % 50;
    const Graph g = generate_random_2ec(n, testing::capped_edges(n, n + seed % (2 * n + 1)),
                                        1 + seed % 1000, seed);
    const Spt t = build_spt(g);
    const auto fast = solve_gse_fast(g, t);
    for (const TreeEdge& e : t.tree_edges()) {
      const FailureContext ctx = build_context(g, t, e);
      const auto slow = gse_for_edge(ctx);
      ASSERT_EQ(fast[t.tree_edge_index(e.child)], slow) << "seed " << seed;
      std::optional<Length> min_key;
      for (const Edge& edge : g.edges()) {
        const bool in_u = ctx.is_detached(edge.u);
        if (in_u == ctx.is_detached(edge.v) ||
            t.is_tree_edge(g.find_edge(edge.u, edge.v).value())) {
          continue;
        }
        const Vertex x = in_u ? edge.v : edge.u;
        const Length key = t.dist(x) + edge.w;
        if (!min_key || key < *min_key) min_key = key;
      }
      EXPECT_EQ(slow->key, *min_key);
    }
  }
}

TEST(GoodSwapEdge, EvaluationBounds) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 5 + seed % 40;
    const Graph g =
        generate_random_2ec(n, testing::capped_edges(n, n + seed % (2 * n + 1)), 1000, seed);
    const Spt t = build_spt(g);
    const GseEvaluation ev = evaluate_gse(g, t);
    for (const GseRecord& r : ev.records) {
      ASSERT_TRUE(r.good);
      EXPECT_LE(*r.mu_good, StretchValue(3, 1));
      EXPECT_GE(*r.mu_good, *r.mu_best);
      EXPECT_LE(2 * *r.ratio, 3);
    }
  }
}

}  // namespace
}  // namespace swapedge
