#include "swapedge/tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace swapedge {

Spt::Spt(const Graph& g, Vertex root) : root_(root) {
  const std::size_t n = g.vertex_count();
  const ShortestPaths sp = dijkstra(g, root);

  parent_.assign(n, kNoVertex);
  parent_weight_.assign(n, 0);
  parent_edge_.assign(n, 0);
  dist_ = sp.dist;
  is_tree_edge_.assign(g.edge_count(), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!sp.parent[v]) continue;
    const Edge& e = g.edge(*sp.parent[v]);
    parent_[v] = e.other(v);
    parent_weight_[v] = e.w;
    parent_edge_[v] = *sp.parent[v];
    is_tree_edge_[*sp.parent[v]] = 1;
  }

  // Children sorted by id (counting sort over parents keeps ids ascending).
  child_offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (parent_[v] != kNoVertex) ++child_offset_[parent_[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) child_offset_[i + 1] += child_offset_[i];
  children_.resize(n == 0 ? 0 : n - 1);
  std::vector<std::size_t> fill(child_offset_.begin(), child_offset_.end() - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (parent_[v] != kNoVertex) children_[fill[parent_[v]]++] = v;
  }

  depth_.assign(n, 0);
  pre_.assign(n, 0);
  post_.assign(n, 0);
  size_.assign(n, 1);
  preorder_.reserve(n);
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    pre_[v] = static_cast<std::uint32_t>(preorder_.size());
    preorder_.push_back(v);
    const auto kids = children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      depth_[*it] = depth_[v] + 1;
      stack.push_back(*it);
    }
  }
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    if (parent_[*it] != kNoVertex) size_[parent_[*it]] += size_[*it];
  }
  // Postorder index: number of vertices finished before v.
  for (const Vertex v : preorder_) {
    post_[v] = pre_[v] + size_[v] - 1 - depth_[v];
  }

  tree_edges_.reserve(n - 1);
  for (std::size_t i = 1; i < preorder_.size(); ++i) {
    const Vertex v = preorder_[i];
    tree_edges_.push_back({parent_[v], v, parent_weight_[v], parent_edge_[v]});
  }

  const int levels = std::max(1, static_cast<int>(std::bit_width(n)));
  jump_.assign(levels, std::vector<Vertex>(n));
  for (Vertex v = 0; v < n; ++v) jump_[0][v] = parent_[v] == kNoVertex ? v : parent_[v];
  for (int k = 1; k < levels; ++k) {
    for (Vertex v = 0; v < n; ++v) jump_[k][v] = jump_[k - 1][jump_[k - 1][v]];
  }
}

Vertex Spt::ancestor(Vertex v, std::uint32_t steps) const {
  for (std::size_t k = 0; steps != 0 && k < jump_.size(); ++k, steps >>= 1) {
    if (steps & 1U) v = jump_[k][v];
  }
  return v;
}

Vertex Spt::lca(Vertex u, Vertex v) const {
  if (in_subtree(u, v)) return v;
  if (in_subtree(v, u)) return u;
  for (std::size_t k = jump_.size(); k-- > 0;) {
    const Vertex up = jump_[k][u];
    if (!in_subtree(v, up)) u = up;
  }
  return parent_[u];
}

Spt build_spt(const Graph& g, Vertex s) { return Spt(g, s); }

Length tree_distance(const Spt& t, Vertex u, Vertex v) {
  return t.dist(u) + t.dist(v) - 2 * t.dist(t.lca(u, v));
}

SubtreeSlice::SubtreeSlice(const Spt& t, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("subtree slice must be nonempty");
  auto by_pre = [&t](Vertex a, Vertex b) { return t.pre(a) < t.pre(b); };
  if (!std::is_sorted(vertices_.begin(), vertices_.end(), by_pre)) {
    std::sort(vertices_.begin(), vertices_.end(), by_pre);
  }
  const Vertex top = vertices_.front();
  lo_ = t.pre(top);
  mask_.assign(t.subtree_size(top), 0);
  for (const Vertex v : vertices_) {
    if (!t.in_subtree(v, top)) throw std::invalid_argument("subtree slice is not connected");
    char& bit = mask_[t.pre(v) - lo_];
    if (bit) throw std::invalid_argument("duplicate vertex in subtree slice");
    bit = 1;
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!contains(t, t.parent(vertices_[i]))) {
      throw std::invalid_argument("subtree slice is not connected");
    }
  }
}

SubtreeSlice detached_set(const Spt& t, Vertex a, Vertex b) {
  if (b >= t.vertex_count() || a >= t.vertex_count() || t.parent(b) != a) {
    throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not a tree edge with child " + std::to_string(b));
  }
  const auto sub = t.subtree(b);
  return SubtreeSlice(t, std::vector<Vertex>(sub.begin(), sub.end()));
}

SubtreeSlice detached_set(const Spt& t, const TreeEdge& e) {
  return detached_set(t, e.parent, e.child);
}

Vertex find_centroid(const Spt& t, const SubtreeSlice& lam) {
  const auto verts = lam.vertices();
  const std::size_t count = verts.size();
  const std::uint32_t lo = t.pre(lam.top());

  // Position of each slice vertex, addressed by preorder offset from the top.
  std::vector<std::uint32_t> position(t.subtree_size(lam.top()), 0);
  for (std::uint32_t i = 0; i < count; ++i) position[t.pre(verts[i]) - lo] = i;

  std::vector<std::uint32_t> size(count, 1), largest_child(count, 0);
  for (std::size_t i = count; i-- > 1;) {
    const std::uint32_t p = position[t.pre(t.parent(verts[i])) - lo];
    size[p] += size[i];
    largest_child[p] = std::max(largest_child[p], size[i]);
  }

  Vertex best = kNoVertex;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t largest =
        std::max<std::size_t>(largest_child[i], count - size[i]);
    if (2 * largest <= count && verts[i] < best) best = verts[i];
  }
  return best;
}

}  // namespace swapedge
