#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace swapedge {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;
/// Length of a path. Every simple path fits because n * max weight < 2^62.
using Length = std::uint64_t;

inline constexpr Length kInfinity = std::numeric_limits<Length>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr Weight kMaxWeight = Weight{1} << 31;
inline constexpr Length kMaxPathLength = Length{1} << 62;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;

  Vertex other(Vertex endpoint) const { return endpoint == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kEdgeCountMismatch,
  kVertexOutOfRange,
  kSelfLoop,
  kNegativeWeight,
  kWeightOverflow,
  kInvalidSource,
  kDisconnected,
};

std::string_view to_string(GraphErrorKind kind);

/// Raised for invalid graph input. `line()` is the 1-based input line, or 0
/// when the graph was built programmatically.
class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, std::size_t line, const std::string& what);

  GraphErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  GraphErrorKind kind_;
  std::size_t line_;
};

/// Immutable, connected, undirected graph with nonnegative integer weights.
///
/// Edges are stored with u < v. Parallel edges are collapsed at construction
/// to their minimum weight; the surviving edge keeps the id of the first
/// occurrence.
class Graph {
 public:
  /// `edge_lines`, when non-empty, gives the input line of each edge and is
  /// only used for error reporting.
  Graph(std::size_t vertex_count, Vertex source, std::vector<Edge> edges,
        std::span<const std::size_t> edge_lines = {});

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Vertex source() const noexcept { return source_; }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  Weight max_weight() const noexcept { return max_weight_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.source_ == b.source_ && a.vertex_count() == b.vertex_count() &&
           a.edges_ == b.edges_;
  }

 private:
  Vertex source_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> adjacency_;
  Weight max_weight_ = 0;
};

/// Reads the text format: header `n m s`, then m lines `u v w`. Lines whose
/// first non-blank character is `#` and blank lines are skipped.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

/// Canonical text form: header, then edges sorted by (u, v) with u < v.
std::string render_graph(const Graph& g);

/// Returns g with edges renumbered in canonical (u, v) order.
Graph canonicalize(const Graph& g);

struct ShortestPaths {
  std::vector<Length> dist;                     // kInfinity when unreachable
  std::vector<std::optional<EdgeId>> parent;    // edge to the parent vertex
};

/// Dijkstra from `src` in g minus `excluded`. On equal tentative distances
/// the parent with the smaller vertex id is kept.
ShortestPaths dijkstra(const Graph& g, Vertex src,
                       std::optional<EdgeId> excluded = std::nullopt);

/// Ids of all bridges, ascending.
std::vector<EdgeId> find_bridges(const Graph& g);

}  // namespace swapedge
