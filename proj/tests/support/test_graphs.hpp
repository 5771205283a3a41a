#pragma once

// Small fixtures and brute-force helpers shared by the unit tests. Nothing
// here calls into the solver code paths it is used to check.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "swapedge/graph.hpp"
#include "swapedge/tree.hpp"

namespace swapedge::testing {

inline Graph triangle(Weight w = 1) { return Graph(3, 0, {{0, 1, w}, {1, 2, w}, {0, 2, w}}); }

/// m clamped to what a simple graph on n vertices can hold.
inline std::size_t capped_edges(std::size_t n, std::size_t m) {
  return std::min(m, n * (n - 1) / 2);
}

inline Graph path3() { return Graph(3, 0, {{0, 1, 1}, {1, 2, 1}}); }

/// Shortest s-t distances by enumerating every simple path. n <= ~9.
inline std::vector<Length> enumerate_distances(const Graph& g, Vertex src,
                                               std::optional<EdgeId> excluded = {}) {
  std::vector<Length> best(g.vertex_count(), kInfinity);
  std::vector<char> on_path(g.vertex_count(), 0);
  std::function<void(Vertex, Length)> walk = [&](Vertex v, Length len) {
    best[v] = std::min(best[v], len);
    on_path[v] = 1;
    for (EdgeId id : g.incident(v)) {
      if (excluded && *excluded == id) continue;
      const Vertex u = g.edge(id).other(v);
      if (!on_path[u]) walk(u, len + g.edge(id).w);
    }
    on_path[v] = 0;
  };
  walk(src, 0);
  return best;
}

/// Connectivity of g minus one edge, by plain search.
inline bool connected_without(const Graph& g, EdgeId removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId id : g.incident(v)) {
      if (id == removed) continue;
      const Vertex u = g.edge(id).other(v);
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.vertex_count();
}

/// Tree path length between u and v by walking parent pointers.
inline Length walk_tree_distance(const Spt& t, Vertex u, Vertex v) {
  std::vector<Length> up(t.vertex_count(), kInfinity);
  Length acc = 0;
  for (Vertex a = u;; a = t.parent(a)) {
    up[a] = acc;
    if (t.parent(a) == kNoVertex) break;
    acc += t.parent_weight(a);
  }
  acc = 0;
  for (Vertex b = v;; b = t.parent(b)) {
    if (up[b] != kInfinity) return acc + up[b];
    acc += t.parent_weight(b);
  }
}

inline std::vector<std::pair<Vertex, Vertex>> tree_edge_pairs(const Spt& t) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const TreeEdge& e : t.tree_edges()) out.emplace_back(e.parent, e.child);
  std::sort(out.begin(), out.end());
  return out;
}

inline const TreeEdge& tree_edge(const Spt& t, Vertex parent, Vertex child) {
  for (const TreeEdge& e : t.tree_edges()) {
    if (e.parent == parent && e.child == child) return e;
  }
  throw std::invalid_argument("no such tree edge");
}

}  // namespace swapedge::testing
