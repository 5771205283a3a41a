#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swapedge/graph.hpp"

namespace swapedge {

/// Tree edge oriented from the source side: `child` is the lower endpoint.
struct TreeEdge {
  Vertex parent = kNoVertex;
  Vertex child = kNoVertex;
  Weight w = 0;
  EdgeId id = 0;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Shortest-path tree rooted at the graph source.
///
/// Children are visited in increasing vertex id, which fixes the preorder.
/// Tree edges are indexed by the preorder of their child: the edge into v has
/// index pre(v) - 1.
class Spt {
 public:
  Spt(const Graph& g, Vertex root);

  Vertex root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return parent_.size(); }

  /// kNoVertex for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  Weight parent_weight(Vertex v) const { return parent_weight_[v]; }
  EdgeId parent_edge(Vertex v) const { return parent_edge_[v]; }
  Length dist(Vertex v) const { return dist_[v]; }
  std::uint32_t depth(Vertex v) const { return depth_[v]; }
  std::uint32_t pre(Vertex v) const { return pre_[v]; }
  std::uint32_t post(Vertex v) const { return post_[v]; }
  std::uint32_t subtree_size(Vertex v) const { return size_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_offset_[v], children_.data() + child_offset_[v + 1]};
  }
  std::span<const Vertex> preorder() const noexcept { return preorder_; }

  std::span<const TreeEdge> tree_edges() const noexcept { return tree_edges_; }
  std::size_t tree_edge_index(Vertex child) const { return pre_[child] - 1; }
  bool is_tree_edge(EdgeId id) const { return is_tree_edge_[id] != 0; }

  /// True iff u lies in the subtree rooted at v.
  bool in_subtree(Vertex u, Vertex v) const {
    return pre_[v] <= pre_[u] && pre_[u] < pre_[v] + size_[v];
  }
  /// Vertices of T_v, in preorder.
  std::span<const Vertex> subtree(Vertex v) const {
    return std::span<const Vertex>(preorder_).subspan(pre_[v], size_[v]);
  }

  Vertex lca(Vertex u, Vertex v) const;
  /// Ancestor of v that is `steps` levels above it.
  Vertex ancestor(Vertex v, std::uint32_t steps) const;

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<Weight> parent_weight_;
  std::vector<EdgeId> parent_edge_;
  std::vector<Length> dist_;
  std::vector<std::uint32_t> depth_, pre_, post_, size_;
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> children_;
  std::vector<Vertex> preorder_;
  std::vector<TreeEdge> tree_edges_;
  std::vector<char> is_tree_edge_;
  std::vector<std::vector<Vertex>> jump_;  // jump_[k][v]: 2^k-th ancestor
};

/// SPT of g rooted at s, parents as chosen by dijkstra(g, s).
Spt build_spt(const Graph& g, Vertex s);
inline Spt build_spt(const Graph& g) { return build_spt(g, g.source()); }

Length tree_distance(const Spt& t, Vertex u, Vertex v);

/// A connected, nonempty vertex subset of the tree, kept in preorder, with
/// an O(1) membership mask over the preorder interval of its top vertex.
class SubtreeSlice {
 public:
  /// Throws std::invalid_argument if `vertices` is empty, has duplicates or
  /// does not induce a connected subtree.
  SubtreeSlice(const Spt& t, std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  /// The unique vertex whose parent is outside the slice.
  Vertex top() const noexcept { return vertices_.front(); }
  bool contains(const Spt& t, Vertex v) const {
    const std::uint32_t p = t.pre(v);
    return p >= lo_ && p - lo_ < mask_.size() && mask_[p - lo_] != 0;
  }

 private:
  std::vector<Vertex> vertices_;
  std::uint32_t lo_ = 0;
  std::vector<char> mask_;
};

/// V(T_child) for a tree edge. Throws std::invalid_argument if (a, b) is not
/// a tree edge with b the child.
SubtreeSlice detached_set(const Spt& t, Vertex a, Vertex b);
SubtreeSlice detached_set(const Spt& t, const TreeEdge& e);

/// Vertex whose removal leaves components of at most |lam|/2 vertices each;
/// the smallest such id when there are two. Linear in |lam|.
Vertex find_centroid(const Spt& t, const SubtreeSlice& lam);

}  // namespace swapedge
