#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "swapedge/failure.hpp"
#include "swapedge/graph.hpp"
#include "swapedge/stretch.hpp"
#include "swapedge/tree.hpp"

// Brute-force reference. Shares only Graph, Spt and dijkstra with the
// solvers: the swap-edge set, the detached set and all swap-tree distances
// are re-derived here, the latter by materializing every swap tree.

namespace swapedge::oracle {

struct ScoredSwap {
  SwapEdge edge;
  StretchValue mu;
  mpq_class lambda;
};

/// Every swap edge of e (unfiltered), each scored by direct definition.
struct EdgeEvaluation {
  TreeEdge edge;
  std::vector<Vertex> detached;  // ascending id
  std::vector<Length> replacement;  // parallel to `detached`
  std::vector<ScoredSwap> swaps;    // ordered by (y, x)
};

EdgeEvaluation evaluate_edge(const Graph& g, const Spt& t, const TreeEdge& e);

struct BestMs {
  StretchValue optimum;
  std::vector<SwapEdge> argmin;
};
struct BestAs {
  mpq_class optimum;
  std::vector<SwapEdge> argmin;
};

/// Empty when e is a bridge.
std::optional<BestMs> best_ms(const EdgeEvaluation& eval);
std::optional<BestAs> best_as(const EdgeEvaluation& eval);
std::optional<Length> min_key(const EdgeEvaluation& eval);

std::optional<BestMs> oracle_best_ms(const Graph& g, const Spt& t, const TreeEdge& e);
std::optional<BestAs> oracle_best_as(const Graph& g, const Spt& t, const TreeEdge& e);

/// Size of the largest component of the slice after deleting c, by search
/// over tree adjacency.
std::size_t largest_component_without(const Spt& t, std::span<const Vertex> slice, Vertex c);

enum class Check {
  kSwappability,   // solver and oracle disagree on whether e has a swap edge
  kMsOptimum,      // abse-ms optimum differs from the brute-force optimum
  kAsOptimum,      // exact abse-as optimum differs from the brute-force optimum
  kAsFastMode,     // floating-point lambda off by more than 1e-9 relative
  kGseKey,         // good swap edge key is not the minimum key of C(e)
  kGseModes,       // fast sweep and per-context good swap edge differ
  kMuBound,        // mu* > 3
  kLambdaBound,    // lambda* > 3
  kGseMuBound,     // mu(g) > 3
  kGseRatio,       // mu(g) / mu* > 3/2
  kDepthBound,     // recursion deeper than floor(log2 |U|) + 1
  kCentroidBound,  // a centroid leaves a component larger than |slice|/2
};

std::string_view to_string(Check check);

struct Discrepancy {
  TreeEdge edge;
  Check check;
  std::string detail;
};

struct DiscrepancyReport {
  std::size_t tree_edges = 0;
  std::vector<Discrepancy> discrepancies;
  std::optional<StretchValue> max_mu;
  std::optional<mpq_class> max_lambda;
  std::optional<StretchValue> max_mu_good;
  std::optional<mpq_class> max_ratio;

  bool passed() const noexcept { return discrepancies.empty(); }
};

struct VerifyOptions {
  unsigned workers = 1;
};

/// Runs every solver and the brute force on g and reports disagreements and
/// bound violations. Empty discrepancy list means pass.
DiscrepancyReport verify(const Graph& g, VerifyOptions opts = {});

}  // namespace swapedge::oracle
