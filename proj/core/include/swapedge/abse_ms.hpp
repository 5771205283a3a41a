#pragma once

#include <optional>
#include <vector>

#include "swapedge/failure.hpp"

namespace swapedge {

struct SolveOptions {
  unsigned workers = 1;
};

/// Candidate minimizing d_{T_{e/f}}(s, c) = key + d_T(y, c); ties to the
/// smaller (y, x). Throws std::logic_error on an unswappable context.
SwapEdge candidate_for_center(const FailureContext& ctx, Vertex c);

/// The piece of lam - c to recurse into: the component holding the first
/// vertex of lam met on the tree path z -> c. Empty when that vertex is c
/// itself, in which case no swap edge into lam beats the current candidate.
std::optional<SubtreeSlice> next_subtree(const FailureContext& ctx, const SubtreeSlice& lam,
                                         Vertex c, Vertex z);

/// One level of the centroid recursion.
struct MsLevel {
  std::vector<Vertex> slice;  // filled only when tracing
  std::size_t slice_size = 0;
  Vertex centroid = kNoVertex;
  SwapEdge candidate;
  StretchValue mu{0, 1};
  Vertex critical = kNoVertex;
};

struct MsResult {
  SwapEdge edge;
  StretchValue mu{0, 1};
  std::size_t depth = 0;
  std::vector<MsLevel> levels;  // outermost first
};

/// Best swap edge under maximum stretch for one failing edge, examining one
/// candidate per centroid level. Empty for an unswappable context.
std::optional<MsResult> abse_ms_for_edge(const FailureContext& ctx, bool trace = false);

struct MsRecord {
  TreeEdge edge;
  std::optional<SwapEdge> swap;
  std::optional<StretchValue> mu;
  std::size_t depth = 0;
  std::size_t detached = 0;
  std::size_t candidates = 0;
};

/// One record per tree edge, in tree-edge index order.
std::vector<MsRecord> solve_abse_ms(const Graph& g, const Spt& t, SolveOptions opts = {});

/// Record for an already built context.
MsRecord solve_abse_ms_edge(const FailureContext& ctx);

}  // namespace swapedge
