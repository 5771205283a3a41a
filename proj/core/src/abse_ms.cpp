#include "swapedge/abse_ms.hpp"

#include <stdexcept>
#include <tuple>

#include "swapedge/detail/parallel.hpp"

namespace swapedge {

SwapEdge candidate_for_center(const FailureContext& ctx, Vertex c) {
  if (!ctx.swappable()) throw std::logic_error("no swap edge for a bridge");
  const auto from_c = distances_from(ctx, c);
  const SwapEdge* best = nullptr;
  Length best_len = kInfinity;
  for (const SwapEdge& f : ctx.candidates()) {
    const Length len = f.key + from_c[ctx.local(f.y)];
    if (!best || std::tie(len, f.y, f.x) < std::tie(best_len, best->y, best->x)) {
      best = &f;
      best_len = len;
    }
  }
  return *best;
}

std::optional<SubtreeSlice> next_subtree(const FailureContext& ctx, const SubtreeSlice& lam,
                                         Vertex c, Vertex z) {
  const Spt& t = ctx.tree();
  const Vertex meet = t.lca(z, c);

  Vertex entry = kNoVertex;
  for (Vertex v = z;; v = t.parent(v)) {
    if (lam.contains(t, v)) {
      entry = v;
      break;
    }
    if (v == meet) break;
  }
  if (entry == kNoVertex) {
    // Descend meet -> c; the first slice vertex from the top is the entry.
    std::vector<Vertex> down;
    for (Vertex v = c; v != meet; v = t.parent(v)) down.push_back(v);
    for (auto it = down.rbegin(); it != down.rend(); ++it) {
      if (lam.contains(t, *it)) {
        entry = *it;
        break;
      }
    }
  }
  if (entry == kNoVertex) throw std::logic_error("centroid not in slice");
  if (entry == c) return std::nullopt;

  std::vector<Vertex> part;
  if (t.in_subtree(entry, c)) {
    const Vertex branch = t.ancestor(entry, t.depth(entry) - t.depth(c) - 1);
    for (const Vertex v : lam.vertices()) {
      if (t.in_subtree(v, branch)) part.push_back(v);
    }
  } else {
    for (const Vertex v : lam.vertices()) {
      if (!t.in_subtree(v, c)) part.push_back(v);
    }
  }
  return SubtreeSlice(t, std::move(part));
}

namespace {

struct Best {
  SwapEdge edge;
  StretchValue mu;
};

Best recurse(const FailureContext& ctx, const SubtreeSlice& lam, bool trace,
             std::vector<MsLevel>& levels) {
  const Spt& t = ctx.tree();
  const Vertex c = find_centroid(t, lam);
  const SwapEdge f = candidate_for_center(ctx, c);
  const CriticalNode crit = mu_and_critical(ctx, f);

  MsLevel level;
  if (trace) level.slice.assign(lam.vertices().begin(), lam.vertices().end());
  level.slice_size = lam.size();
  level.centroid = c;
  level.candidate = f;
  level.mu = crit.mu;
  level.critical = crit.z;
  levels.push_back(std::move(level));

  Best here{f, crit.mu};
  if (lam.size() == 1) return here;
  const auto inner = next_subtree(ctx, lam, c, crit.z);
  if (!inner) return here;
  Best deeper = recurse(ctx, *inner, trace, levels);
  return deeper.mu < here.mu ? deeper : here;
}

}  // namespace

std::optional<MsResult> abse_ms_for_edge(const FailureContext& ctx, bool trace) {
  if (!ctx.swappable()) return std::nullopt;
  MsResult result;
  const Best best = recurse(ctx, ctx.detached(), trace, result.levels);
  result.edge = best.edge;
  result.mu = best.mu;
  result.depth = result.levels.size();
  return result;
}

MsRecord solve_abse_ms_edge(const FailureContext& ctx) {
  MsRecord rec;
  rec.edge = ctx.edge();
  rec.detached = ctx.detached_count();
  rec.candidates = ctx.candidates().size();
  if (auto res = abse_ms_for_edge(ctx)) {
    rec.swap = res->edge;
    rec.mu = res->mu;
    rec.depth = res->depth;
  }
  return rec;
}

std::vector<MsRecord> solve_abse_ms(const Graph& g, const Spt& t, SolveOptions opts) {
  const auto edges = t.tree_edges();
  std::vector<MsRecord> out(edges.size());
  detail::parallel_for(edges.size(), opts.workers, [&](std::size_t i) {
    out[i] = solve_abse_ms_edge(build_context(g, t, edges[i]));
  });
  return out;
}

}  // namespace swapedge
