#include "swapedge/failure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swapedge {

StretchValue::StretchValue(Length num, Length den) : num_(num), den_(den) {
  if (den == 0) throw std::domain_error("stretch with zero denominator");
}

StretchValue StretchValue::reduced() const {
  const Length g = std::gcd(num_, den_);
  return {num_ / g, den_ / g};
}

mpq_class StretchValue::to_rational() const {
  mpz_class num, den;
  mpz_import(num.get_mpz_t(), 1, -1, sizeof(num_), 0, 0, &num_);
  mpz_import(den.get_mpz_t(), 1, -1, sizeof(den_), 0, 0, &den_);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string StretchValue::to_string() const {
  const StretchValue r = reduced();
  return std::to_string(r.num_) + "/" + std::to_string(r.den_);
}

std::string fraction_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

FailureContext::FailureContext(const Spt& tree, TreeEdge edge, SubtreeSlice detached,
                               std::vector<Length> replacement,
                               std::vector<SwapEdge> candidates)
    : tree_(&tree),
      edge_(edge),
      detached_(std::move(detached)),
      base_(tree.pre(edge.child)),
      replacement_(std::move(replacement)),
      candidates_(std::move(candidates)) {}

FailureContext build_context(const Graph& g, const Spt& t, const TreeEdge& e) {
  const ShortestPaths sp = dijkstra(g, g.source(), e.id);
  return build_context(g, t, e, sp.dist);
}

FailureContext build_context(const Graph& g, const Spt& t, const TreeEdge& e,
                             std::span<const Length> replacement_dist) {
  SubtreeSlice detached = detached_set(t, e);
  const auto verts = detached.vertices();

  std::vector<Length> replacement;
  replacement.reserve(verts.size());
  for (const Vertex v : verts) replacement.push_back(replacement_dist[v]);

  std::vector<SwapEdge> candidates;
  for (const Vertex y : verts) {
    std::optional<SwapEdge> best;
    for (const EdgeId id : g.incident(y)) {
      if (id == e.id) continue;
      const Edge& edge = g.edge(id);
      const Vertex x = edge.other(y);
      if (t.in_subtree(x, e.child)) continue;
      const SwapEdge f{x, y, edge.w, t.dist(x) + edge.w, id};
      if (!best || f.key < best->key || (f.key == best->key && f.x < best->x)) best = f;
    }
    if (best) candidates.push_back(*best);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const SwapEdge& a, const SwapEdge& b) { return a.y < b.y; });

  if (!candidates.empty()) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (replacement[i] == 0) {
        throw std::domain_error("vertex " + std::to_string(verts[i]) +
                                " has zero replacement distance; stretch undefined");
      }
    }
  }
  return FailureContext(t, e, std::move(detached), std::move(replacement),
                        std::move(candidates));
}

Length swap_tree_dist(const FailureContext& ctx, const SwapEdge& f, Vertex v) {
  if (v >= ctx.tree().vertex_count() || !ctx.is_detached(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not detached");
  }
  return f.key + tree_distance(ctx.tree(), f.y, v);
}

StretchValue stretch(const FailureContext& ctx, const SwapEdge& f, Vertex v) {
  const Length num = swap_tree_dist(ctx, f, v);
  const Length den = ctx.replacement(v);
  if (den == kInfinity) throw std::domain_error("vertex unreachable after failure");
  return {num, den};
}

std::vector<Length> distances_from(const FailureContext& ctx, Vertex y) {
  const Spt& t = ctx.tree();
  const auto verts = ctx.detached().vertices();
  // meet[i]: the lowest ancestor of verts[i] lying on the b -> y tree path,
  // i.e. lca(verts[i], y). Preorder guarantees parents are resolved first.
  std::vector<char> on_path(verts.size(), 0);
  for (Vertex v = y;; v = t.parent(v)) {
    on_path[ctx.local(v)] = 1;
    if (v == ctx.edge().child) break;
  }
  std::vector<Vertex> meet(verts.size());
  std::vector<Length> out(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vertex v = verts[i];
    meet[i] = on_path[i] ? v : meet[ctx.local(t.parent(v))];
    out[i] = t.dist(v) + t.dist(y) - 2 * t.dist(meet[i]);
  }
  return out;
}

CriticalNode mu_and_critical(const FailureContext& ctx, const SwapEdge& f) {
  const auto verts = ctx.detached().vertices();
  const auto from_y = distances_from(ctx, f.y);
  std::optional<CriticalNode> best;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const StretchValue s(f.key + from_y[i], ctx.replacement()[i]);
    if (!best || s > best->mu || (s == best->mu && verts[i] < best->z)) {
      best = CriticalNode{s, verts[i]};
    }
  }
  return *best;
}

}  // namespace swapedge
