#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "swapedge/abse_ms.hpp"
#include "swapedge/failure.hpp"

namespace swapedge {

/// Good swap edge: minimum key d_T(s, x) + w over the candidates, ties to
/// the smaller (y, x). Empty for a bridge.
std::optional<SwapEdge> gse_for_edge(const FailureContext& ctx);

/// Good swap edges for all tree edges at once, indexed by tree-edge index,
/// without computing any replacement distance.
///
/// Every non-tree edge (u, v, w) is split into two half-edges: one covering
/// the tree path from u up to lca(u, v) (u detached, key d_T(s, v) + w) and
/// one covering the path from v (key d_T(s, u) + w). Half-edges are swept in
/// (key, y, x) order; each climbs its path through a union-find over already
/// labeled tree edges and labels the ones still free. Tree edges left
/// unlabeled are bridges.
std::vector<std::optional<SwapEdge>> solve_gse_fast(const Graph& g, const Spt& t);

struct GseRecord {
  TreeEdge edge;
  std::optional<SwapEdge> good;
  std::optional<SwapEdge> best;
  std::optional<StretchValue> mu_good;
  std::optional<StretchValue> mu_best;
  std::optional<mpq_class> ratio;  // mu_good / mu_best
  std::size_t detached = 0;
};

struct GseEvaluation {
  std::vector<GseRecord> records;
  std::optional<StretchValue> max_mu_good;
  std::optional<mpq_class> max_ratio;
};

/// Scores a given good swap edge against the exact max-stretch optimum.
GseRecord evaluate_gse_edge(const FailureContext& ctx, const std::optional<SwapEdge>& good);

/// Good swap edges from the fast sweep, scored against abse-ms per tree edge.
GseEvaluation evaluate_gse(const Graph& g, const Spt& t, SolveOptions opts = {});

}  // namespace swapedge
