#include "swapedge/gse.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "swapedge/detail/parallel.hpp"

namespace swapedge {

std::optional<SwapEdge> gse_for_edge(const FailureContext& ctx) {
  const auto candidates = ctx.candidates();
  const auto it = std::min_element(
      candidates.begin(), candidates.end(), [](const SwapEdge& a, const SwapEdge& b) {
        return std::tie(a.key, a.y, a.x) < std::tie(b.key, b.y, b.x);
      });
  if (it == candidates.end()) return std::nullopt;
  return *it;
}

namespace {

struct HalfEdge {
  SwapEdge edge;
  Vertex stop;  // lca of the endpoints; the climb ends below it
};

}  // namespace

std::vector<std::optional<SwapEdge>> solve_gse_fast(const Graph& g, const Spt& t) {
  std::vector<HalfEdge> halves;
  halves.reserve(2 * (g.edge_count() - (t.vertex_count() - 1)));
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (t.is_tree_edge(id)) continue;
    const Edge& e = g.edge(id);
    const Vertex meet = t.lca(e.u, e.v);
    if (e.u != meet) halves.push_back({{e.v, e.u, e.w, t.dist(e.v) + e.w, id}, meet});
    if (e.v != meet) halves.push_back({{e.u, e.v, e.w, t.dist(e.u) + e.w, id}, meet});
  }
  std::sort(halves.begin(), halves.end(), [](const HalfEdge& a, const HalfEdge& b) {
    return std::tie(a.edge.key, a.edge.y, a.edge.x) < std::tie(b.edge.key, b.edge.y, b.edge.x);
  });

  // up[v] == v while the tree edge into v is unlabeled (the root is its own
  // permanent representative); labeled vertices point towards the root.
  const std::size_t n = t.vertex_count();
  std::vector<Vertex> up(n);
  for (Vertex v = 0; v < n; ++v) up[v] = v;
  auto find = [&up](Vertex v) {
    Vertex r = v;
    while (up[r] != r) r = up[r];
    while (up[v] != r) v = std::exchange(up[v], r);
    return r;
  };

  std::vector<std::optional<SwapEdge>> out(t.tree_edges().size());
  const Vertex root = t.root();
  for (const HalfEdge& h : halves) {
    const std::uint32_t stop_depth = t.depth(h.stop);
    for (Vertex p = find(h.edge.y); p != root && t.depth(p) > stop_depth;
         p = find(t.parent(p))) {
      out[t.tree_edge_index(p)] = h.edge;
      up[p] = t.parent(p);
    }
  }
  return out;
}

GseRecord evaluate_gse_edge(const FailureContext& ctx, const std::optional<SwapEdge>& good) {
  GseRecord rec;
  rec.edge = ctx.edge();
  rec.detached = ctx.detached_count();
  rec.good = good;
  if (!good || !ctx.swappable()) return rec;
  rec.mu_good = mu_and_critical(ctx, *good).mu;
  if (const auto best = abse_ms_for_edge(ctx)) {
    rec.best = best->edge;
    rec.mu_best = best->mu;
    mpq_class ratio = rec.mu_good->to_rational() / best->mu.to_rational();
    rec.ratio = ratio;
  }
  return rec;
}

GseEvaluation evaluate_gse(const Graph& g, const Spt& t, SolveOptions opts) {
  const auto good = solve_gse_fast(g, t);
  const auto edges = t.tree_edges();
  GseEvaluation eval;
  eval.records.resize(edges.size());
  detail::parallel_for(edges.size(), opts.workers, [&](std::size_t i) {
    eval.records[i] = evaluate_gse_edge(build_context(g, t, edges[i]), good[i]);
  });
  for (const GseRecord& rec : eval.records) {
    if (rec.mu_good && (!eval.max_mu_good || *rec.mu_good > *eval.max_mu_good)) {
      eval.max_mu_good = rec.mu_good;
    }
    if (rec.ratio && (!eval.max_ratio || *rec.ratio > *eval.max_ratio)) {
      eval.max_ratio = rec.ratio;
    }
  }
  return eval;
}

}  // namespace swapedge
