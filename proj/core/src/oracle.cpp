#include "swapedge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "swapedge/abse_as.hpp"
#include "swapedge/abse_ms.hpp"
#include "swapedge/detail/parallel.hpp"
#include "swapedge/gse.hpp"

namespace swapedge::oracle {

namespace {

struct Arc {
  Vertex to;
  Weight w;
};

std::vector<std::vector<Arc>> tree_adjacency(const Spt& t) {
  std::vector<std::vector<Arc>> adj(t.vertex_count());
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.parent(v) == kNoVertex) continue;
    adj[v].push_back({t.parent(v), t.parent_weight(v)});
    adj[t.parent(v)].push_back({v, t.parent_weight(v)});
  }
  return adj;
}

// Distances from the root in T - e + f, found by walking the swap tree.
std::vector<Length> swap_tree_distances(const Spt& t, const std::vector<std::vector<Arc>>& adj,
                                        const TreeEdge& e, const SwapEdge& f) {
  std::vector<Length> dist(t.vertex_count(), kInfinity);
  auto is_failed = [&](Vertex a, Vertex b) {
    return (a == e.parent && b == e.child) || (a == e.child && b == e.parent);
  };
  std::vector<Vertex> stack{t.root()};
  dist[t.root()] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    auto visit = [&](Vertex u, Weight w) {
      if (dist[u] == kInfinity) {
        dist[u] = dist[v] + w;
        stack.push_back(u);
      }
    };
    for (const Arc& arc : adj[v]) {
      if (!is_failed(v, arc.to)) visit(arc.to, arc.w);
    }
    if (v == f.x) visit(f.y, f.w);
    if (v == f.y) visit(f.x, f.w);
  }
  return dist;
}

mpz_class to_mpz(Length x) { return mpz_class(static_cast<unsigned long>(x)); }

}  // namespace

EdgeEvaluation evaluate_edge(const Graph& g, const Spt& t, const TreeEdge& e) {
  if (t.parent(e.child) != e.parent) throw std::invalid_argument("not a tree edge");
  const std::size_t n = t.vertex_count();
  EdgeEvaluation eval;
  eval.edge = e;

  std::vector<char> below(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex u = v;
    while (u != e.child && t.parent(u) != kNoVertex) u = t.parent(u);
    below[v] = u == e.child;
    if (below[v]) eval.detached.push_back(v);
  }

  const ShortestPaths after = dijkstra(g, g.source(), e.id);
  for (const Vertex v : eval.detached) eval.replacement.push_back(after.dist[v]);

  std::vector<SwapEdge> swaps;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (id == e.id) continue;
    const Edge& edge = g.edge(id);
    if (below[edge.u] == below[edge.v]) continue;
    const Vertex x = below[edge.u] ? edge.v : edge.u;
    const Vertex y = edge.other(x);
    swaps.push_back({x, y, edge.w, t.dist(x) + edge.w, id});
  }
  std::sort(swaps.begin(), swaps.end(), [](const SwapEdge& a, const SwapEdge& b) {
    return std::tie(a.y, a.x) < std::tie(b.y, b.x);
  });
  if (swaps.empty()) return eval;

  mpz_class common = 1;
  for (const Length d : eval.replacement) common = lcm(common, to_mpz(d));
  const mpz_class scale = common * static_cast<unsigned long>(eval.detached.size());

  const auto adj = tree_adjacency(t);
  for (const SwapEdge& f : swaps) {
    const auto dist = swap_tree_distances(t, adj, e, f);
    std::optional<StretchValue> mu;
    mpz_class total = 0;
    for (std::size_t i = 0; i < eval.detached.size(); ++i) {
      const StretchValue s(dist[eval.detached[i]], eval.replacement[i]);
      if (!mu || s > *mu) mu = s;
      total += to_mpz(dist[eval.detached[i]]) * (common / to_mpz(eval.replacement[i]));
    }
    mpq_class lambda(total, scale);
    lambda.canonicalize();
    eval.swaps.push_back({f, *mu, std::move(lambda)});
  }
  return eval;
}

std::optional<BestMs> best_ms(const EdgeEvaluation& eval) {
  if (eval.swaps.empty()) return std::nullopt;
  BestMs best{eval.swaps.front().mu, {}};
  for (const ScoredSwap& s : eval.swaps) best.optimum = std::min(best.optimum, s.mu);
  for (const ScoredSwap& s : eval.swaps) {
    if (s.mu == best.optimum) best.argmin.push_back(s.edge);
  }
  return best;
}

std::optional<BestAs> best_as(const EdgeEvaluation& eval) {
  if (eval.swaps.empty()) return std::nullopt;
  BestAs best{eval.swaps.front().lambda, {}};
  for (const ScoredSwap& s : eval.swaps) {
    if (s.lambda < best.optimum) best.optimum = s.lambda;
  }
  for (const ScoredSwap& s : eval.swaps) {
    if (s.lambda == best.optimum) best.argmin.push_back(s.edge);
  }
  return best;
}

std::optional<Length> min_key(const EdgeEvaluation& eval) {
  std::optional<Length> best;
  for (const ScoredSwap& s : eval.swaps) {
    if (!best || s.edge.key < *best) best = s.edge.key;
  }
  return best;
}

std::optional<BestMs> oracle_best_ms(const Graph& g, const Spt& t, const TreeEdge& e) {
  return best_ms(evaluate_edge(g, t, e));
}

std::optional<BestAs> oracle_best_as(const Graph& g, const Spt& t, const TreeEdge& e) {
  return best_as(evaluate_edge(g, t, e));
}

std::size_t largest_component_without(const Spt& t, std::span<const Vertex> slice, Vertex c) {
  const auto adj = tree_adjacency(t);
  std::vector<char> in_slice(t.vertex_count(), 0), seen(t.vertex_count(), 0);
  for (const Vertex v : slice) in_slice[v] = 1;
  std::size_t largest = 0;
  for (const Vertex start : slice) {
    if (start == c || seen[start]) continue;
    std::size_t size = 0;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (const Arc& arc : adj[v]) {
        if (arc.to != c && in_slice[arc.to] && !seen[arc.to]) {
          seen[arc.to] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    largest = std::max(largest, size);
  }
  return largest;
}

std::string_view to_string(Check check) {
  switch (check) {
    case Check::kSwappability: return "swappability";
    case Check::kMsOptimum: return "ms-optimum";
    case Check::kAsOptimum: return "as-optimum";
    case Check::kAsFastMode: return "as-fast-mode";
    case Check::kGseKey: return "gse-key";
    case Check::kGseModes: return "gse-modes";
    case Check::kMuBound: return "mu-bound";
    case Check::kLambdaBound: return "lambda-bound";
    case Check::kGseMuBound: return "gse-mu-bound";
    case Check::kGseRatio: return "gse-ratio";
    case Check::kDepthBound: return "depth-bound";
    case Check::kCentroidBound: return "centroid-bound";
  }
  return "unknown";
}

namespace {

struct EdgeVerdict {
  std::vector<Discrepancy> found;
  std::optional<StretchValue> mu;
  std::optional<mpq_class> lambda;
  std::optional<StretchValue> mu_good;
  std::optional<mpq_class> ratio;
};

std::string edge_string(const SwapEdge& f) {
  return "(" + std::to_string(f.x) + "," + std::to_string(f.y) + ")";
}

EdgeVerdict verify_edge(const Graph& g, const Spt& t, const TreeEdge& e,
                        const std::optional<SwapEdge>& fast_good) {
  EdgeVerdict out;
  auto report = [&](Check check, std::string detail) {
    out.found.push_back({e, check, std::move(detail)});
  };

  const EdgeEvaluation eval = evaluate_edge(g, t, e);
  const FailureContext ctx = build_context(g, t, e);
  const auto ms = abse_ms_for_edge(ctx, true);
  const auto as_exact = solve_abse_as_edge(ctx, Arithmetic::kExact);
  const auto as_fast = solve_abse_as_edge(ctx, Arithmetic::kFast);
  const auto slow_good = gse_for_edge(ctx);

  if (fast_good != slow_good) {
    report(Check::kGseModes, "fast " + (fast_good ? edge_string(*fast_good) : "-") +
                                 " vs per-context " +
                                 (slow_good ? edge_string(*slow_good) : "-"));
  }
  const bool oracle_swappable = !eval.swaps.empty();
  if (oracle_swappable != ctx.swappable() || oracle_swappable != ms.has_value() ||
      oracle_swappable != as_exact.swap.has_value() || oracle_swappable != slow_good.has_value()) {
    report(Check::kSwappability, oracle_swappable ? "solver found no swap edge"
                                                  : "solver found a swap edge for a bridge");
    return out;
  }
  if (!oracle_swappable) return out;

  const auto bms = best_ms(eval);
  const auto bas = best_as(eval);
  out.mu = ms->mu;
  out.lambda = *as_exact.lambda;

  if (ms->mu != bms->optimum) {
    report(Check::kMsOptimum, "solver " + ms->mu.to_string() + " oracle " +
                                  bms->optimum.to_string());
  }
  if (*as_exact.lambda != bas->optimum) {
    report(Check::kAsOptimum, "solver " + fraction_string(*as_exact.lambda) + " oracle " +
                                  fraction_string(bas->optimum));
  }
  const double exact = bas->optimum.get_d();
  if (std::abs(as_fast.lambda_approx - exact) > 1e-9 * exact) {
    report(Check::kAsFastMode, "fast " + std::to_string(as_fast.lambda_approx) + " oracle " +
                                   fraction_string(bas->optimum));
  }
  if (slow_good->key != *min_key(eval)) {
    report(Check::kGseKey, "key " + std::to_string(slow_good->key) + " oracle " +
                               std::to_string(*min_key(eval)));
  }

  const StretchValue three(3, 1);
  const StretchValue mu_good = mu_and_critical(ctx, *slow_good).mu;
  out.mu_good = mu_good;
  out.ratio = mpq_class(mu_good.to_rational() / ms->mu.to_rational());
  if (ms->mu > three) report(Check::kMuBound, ms->mu.to_string());
  if (*as_exact.lambda > 3) report(Check::kLambdaBound, fraction_string(*as_exact.lambda));
  if (mu_good > three) report(Check::kGseMuBound, mu_good.to_string());
  if (2 * static_cast<Wide>(mu_good.num()) * ms->mu.den() >
      3 * static_cast<Wide>(mu_good.den()) * ms->mu.num()) {
    report(Check::kGseRatio, fraction_string(*out.ratio));
  }

  const std::size_t depth_cap =
      static_cast<std::size_t>(std::bit_width(ctx.detached_count()));  // floor(log2)+1
  if (ms->depth > depth_cap) {
    report(Check::kDepthBound, std::to_string(ms->depth) + " > " + std::to_string(depth_cap));
  }
  for (const MsLevel& level : ms->levels) {
    const std::size_t largest = largest_component_without(t, level.slice, level.centroid);
    if (2 * largest > level.slice.size()) {
      report(Check::kCentroidBound, "centroid " + std::to_string(level.centroid) +
                                        " leaves " + std::to_string(largest) + " of " +
                                        std::to_string(level.slice.size()));
    }
  }
  return out;
}

}  // namespace

DiscrepancyReport verify(const Graph& g, VerifyOptions opts) {
  const Spt t = build_spt(g);
  const auto fast_good = solve_gse_fast(g, t);
  const auto edges = t.tree_edges();
  std::vector<EdgeVerdict> verdicts(edges.size());
  detail::parallel_for(edges.size(), opts.workers, [&](std::size_t i) {
    verdicts[i] = verify_edge(g, t, edges[i], fast_good[i]);
  });

  DiscrepancyReport report;
  report.tree_edges = edges.size();
  for (EdgeVerdict& v : verdicts) {
    for (Discrepancy& d : v.found) report.discrepancies.push_back(std::move(d));
    if (v.mu && (!report.max_mu || *v.mu > *report.max_mu)) report.max_mu = v.mu;
    if (v.lambda && (!report.max_lambda || *v.lambda > *report.max_lambda)) {
      report.max_lambda = v.lambda;
    }
    if (v.mu_good && (!report.max_mu_good || *v.mu_good > *report.max_mu_good)) {
      report.max_mu_good = v.mu_good;
    }
    if (v.ratio && (!report.max_ratio || *v.ratio > *report.max_ratio)) {
      report.max_ratio = v.ratio;
    }
  }
  return report;
}

}  // namespace swapedge::oracle
