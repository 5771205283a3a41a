#pragma once

#include <optional>
#include <span>
#include <vector>

#include "swapedge/graph.hpp"
#include "swapedge/stretch.hpp"
#include "swapedge/tree.hpp"

namespace swapedge {

/// Non-tree edge reconnecting T - e, oriented so that x stays attached to
/// the source and y lies in the detached subtree.
struct SwapEdge {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  Weight w = 0;
  /// d_T(s, x) + w: the length of s -> x -> y in the swap tree.
  Length key = 0;
  EdgeId id = 0;

  friend bool operator==(const SwapEdge&, const SwapEdge&) = default;
};

/// Everything a solver needs about one failing tree edge e = (a, b).
///
/// Holds a non-owning pointer to the tree it was built from; the Spt must
/// outlive the context.
class FailureContext {
 public:
  FailureContext(const Spt& tree, TreeEdge edge, SubtreeSlice detached,
                 std::vector<Length> replacement, std::vector<SwapEdge> candidates);

  const Spt& tree() const noexcept { return *tree_; }
  const TreeEdge& edge() const noexcept { return edge_; }
  /// V(T_b), in preorder.
  const SubtreeSlice& detached() const noexcept { return detached_; }
  std::size_t detached_count() const noexcept { return detached_.size(); }

  /// Index of v in detached().vertices(); v must be detached.
  std::size_t local(Vertex v) const { return tree_->pre(v) - base_; }
  bool is_detached(Vertex v) const { return tree_->in_subtree(v, edge_.child); }
  /// d_{G-e}(s, v) for a detached v.
  Length replacement(Vertex v) const { return replacement_[local(v)]; }
  std::span<const Length> replacement() const noexcept { return replacement_; }

  /// At most one swap edge per detached endpoint, the one of minimum key
  /// (smaller x on ties), sorted by y.
  std::span<const SwapEdge> candidates() const noexcept { return candidates_; }
  bool swappable() const noexcept { return !candidates_.empty(); }

 private:
  const Spt* tree_;
  TreeEdge edge_;
  SubtreeSlice detached_;
  std::uint32_t base_;
  std::vector<Length> replacement_;
  std::vector<SwapEdge> candidates_;
};

/// Builds the context for tree edge e, running Dijkstra on G - e.
/// A bridge yields a context with no candidates. Throws std::domain_error if
/// some detached vertex has replacement distance 0 (stretch undefined).
FailureContext build_context(const Graph& g, const Spt& t, const TreeEdge& e);

/// Same, with d_{G-e}(s, .) already computed (e.g. timed separately).
FailureContext build_context(const Graph& g, const Spt& t, const TreeEdge& e,
                             std::span<const Length> replacement_dist);

/// d_{T_{e/f}}(s, v). Throws std::invalid_argument if v is not detached.
Length swap_tree_dist(const FailureContext& ctx, const SwapEdge& f, Vertex v);

/// sigma_{G-e}(T_{e/f}, v).
StretchValue stretch(const FailureContext& ctx, const SwapEdge& f, Vertex v);

struct CriticalNode {
  StretchValue mu;
  Vertex z;
};

/// Max stretch of f over the detached subtree and the vertex attaining it
/// (smallest id on ties). One O(|U|) pass.
CriticalNode mu_and_critical(const FailureContext& ctx, const SwapEdge& f);

/// d_T(f.y, v) for every detached v, indexed like detached().vertices().
std::vector<Length> distances_from(const FailureContext& ctx, Vertex y);

}  // namespace swapedge
