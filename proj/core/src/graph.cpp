#include "swapedge/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace swapedge {

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kMalformedHeader: return "malformed header";
    case GraphErrorKind::kMalformedEdge: return "malformed edge line";
    case GraphErrorKind::kEdgeCountMismatch: return "edge count mismatch";
    case GraphErrorKind::kVertexOutOfRange: return "vertex out of range";
    case GraphErrorKind::kSelfLoop: return "self-loop";
    case GraphErrorKind::kNegativeWeight: return "negative weight";
    case GraphErrorKind::kWeightOverflow: return "weight overflow";
    case GraphErrorKind::kInvalidSource: return "invalid source";
    case GraphErrorKind::kDisconnected: return "disconnected graph";
  }
  return "unknown";
}

namespace {

std::string describe(GraphErrorKind kind, std::size_t line, const std::string& what) {
  std::string msg(to_string(kind));
  if (line != 0) msg += " at line " + std::to_string(line);
  if (!what.empty()) msg += ": " + what;
  return msg;
}

}  // namespace

GraphError::GraphError(GraphErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error(describe(kind, line, what)), kind_(kind), line_(line) {}

Graph::Graph(std::size_t vertex_count, Vertex source, std::vector<Edge> edges,
             std::span<const std::size_t> edge_lines)
    : source_(source) {
  auto line_of = [&](std::size_t i) -> std::size_t {
    return i < edge_lines.size() ? edge_lines[i] : 0;
  };
  if (vertex_count == 0 || vertex_count >= kNoVertex) {
    throw GraphError(GraphErrorKind::kMalformedHeader, 0, "vertex count must be in [1, 2^32-1)");
  }
  if (source >= vertex_count) {
    throw GraphError(GraphErrorKind::kInvalidSource, 0,
                     "source " + std::to_string(source) + " not below n");
  }

  std::unordered_map<std::uint64_t, EdgeId> seen;
  seen.reserve(edges.size() * 2);
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange, line_of(i),
                       std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::kSelfLoop, line_of(i), std::to_string(e.u));
    }
    if (e.w > kMaxWeight) {
      throw GraphError(GraphErrorKind::kWeightOverflow, line_of(i),
                       "weight " + std::to_string(e.w) + " exceeds 2^31");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    const std::uint64_t key = (std::uint64_t{e.u} << 32) | e.v;
    auto [it, inserted] = seen.emplace(key, static_cast<EdgeId>(edges_.size()));
    if (inserted) {
      edges_.push_back(e);
    } else {
      Edge& kept = edges_[it->second];
      kept.w = std::min(kept.w, e.w);
    }
  }

  for (const Edge& e : edges_) max_weight_ = std::max(max_weight_, e.w);
  if (max_weight_ != 0 && vertex_count > kMaxPathLength / max_weight_) {
    throw GraphError(GraphErrorKind::kWeightOverflow, 0,
                     "n * max weight must stay below 2^62");
  }

  offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    adjacency_[fill[edges_[id].u]++] = id;
    adjacency_[fill[edges_[id].v]++] = id;
  }

  std::vector<char> reached(vertex_count, 0);
  std::vector<Vertex> stack{source_};
  reached[source_] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId id : incident(v)) {
      const Vertex u = edges_[id].other(v);
      if (!reached[u]) {
        reached[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != vertex_count) {
    const auto missing = std::find(reached.begin(), reached.end(), 0) - reached.begin();
    throw GraphError(GraphErrorKind::kDisconnected, 0,
                     "vertex " + std::to_string(missing) + " unreachable from source");
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  const Vertex from = incident(u).size() <= incident(v).size() ? u : v;
  const Vertex to = from == u ? v : u;
  for (EdgeId id : incident(from)) {
    if (edges_[id].other(from) == to) return id;
  }
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_unsigned(std::string_view s, std::uint64_t& out) {
  if (s.empty() || s.front() == '+' || s.front() == '-') return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool looks_negative(std::string_view s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size() && value < 0;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0, s = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::size_t header_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (!have_header) {
      if (fields.size() != 3 || !parse_unsigned(fields[0], n) ||
          !parse_unsigned(fields[1], m) || !parse_unsigned(fields[2], s)) {
        throw GraphError(GraphErrorKind::kMalformedHeader, line_no, std::string(line));
      }
      if (n == 0 || n >= kNoVertex) {
        throw GraphError(GraphErrorKind::kMalformedHeader, line_no,
                         "vertex count out of range");
      }
      if (s >= n) {
        throw GraphError(GraphErrorKind::kInvalidSource, line_no,
                         "source " + std::to_string(s) + " not below n");
      }
      have_header = true;
      header_line = line_no;
      edges.reserve(std::min<std::uint64_t>(m, 1u << 20));
      continue;
    }
    if (fields.size() != 3) {
      throw GraphError(GraphErrorKind::kMalformedEdge, line_no, std::string(line));
    }
    std::uint64_t u = 0, v = 0, w = 0;
    if (!parse_unsigned(fields[0], u) || !parse_unsigned(fields[1], v)) {
      throw GraphError(GraphErrorKind::kMalformedEdge, line_no, std::string(line));
    }
    if (!parse_unsigned(fields[2], w)) {
      const auto kind = looks_negative(fields[2]) ? GraphErrorKind::kNegativeWeight
                                                  : GraphErrorKind::kMalformedEdge;
      throw GraphError(kind, line_no, std::string(line));
    }
    if (u >= n || v >= n) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange, line_no, std::string(line));
    }
    if (w > kMaxWeight) {
      throw GraphError(GraphErrorKind::kWeightOverflow, line_no, std::string(line));
    }
    if (edges.size() == m) {
      throw GraphError(GraphErrorKind::kEdgeCountMismatch, line_no,
                       "more than " + std::to_string(m) + " edges");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    lines.push_back(line_no);
  }
  if (!have_header) {
    throw GraphError(GraphErrorKind::kMalformedHeader, line_no + 1, "missing header");
  }
  if (edges.size() != m) {
    throw GraphError(GraphErrorKind::kEdgeCountMismatch, header_line,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), static_cast<Vertex>(s), std::move(edges), lines);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph canonicalize(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return Graph(g.vertex_count(), g.source(), std::move(edges));
}

std::string render_graph(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  std::string out;
  out.reserve(16 * (edges.size() + 1));
  out += std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + ' ' +
         std::to_string(g.source()) + '\n';
  for (const Edge& e : edges) {
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + std::to_string(e.w) + '\n';
  }
  return out;
}

ShortestPaths dijkstra(const Graph& g, Vertex src, std::optional<EdgeId> excluded) {
  const std::size_t n = g.vertex_count();
  ShortestPaths sp{std::vector<Length>(n, kInfinity),
                   std::vector<std::optional<EdgeId>>(n)};
  std::vector<Vertex> parent_vertex(n, kNoVertex);
  std::vector<char> settled(n, 0);

  using Item = std::pair<Length, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  sp.dist[src] = 0;
  queue.emplace(0, src);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (EdgeId id : g.incident(u)) {
      if (excluded && *excluded == id) continue;
      const Edge& e = g.edge(id);
      const Vertex v = e.other(u);
      if (settled[v]) continue;
      const Length nd = d + e.w;
      if (nd < sp.dist[v]) {
        sp.dist[v] = nd;
        sp.parent[v] = id;
        parent_vertex[v] = u;
        queue.emplace(nd, v);
      } else if (nd == sp.dist[v] && u < parent_vertex[v]) {
        sp.parent[v] = id;
        parent_vertex[v] = u;
      }
    }
  }
  return sp;
}

std::vector<EdgeId> find_bridges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
  std::vector<EdgeId> bridges;

  struct Frame {
    Vertex v;
    std::optional<EdgeId> via;
    std::size_t next;
  };
  std::uint32_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    std::vector<Frame> stack{{root, std::nullopt, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto inc = g.incident(top.v);
      if (top.next < inc.size()) {
        const EdgeId id = inc[top.next++];
        if (top.via && *top.via == id) continue;
        const Vertex u = g.edge(id).other(top.v);
        if (disc[u] == kUnvisited) {
          disc[u] = low[u] = timer++;
          stack.push_back({u, id, 0});
        } else {
          low[top.v] = std::min(low[top.v], disc[u]);
        }
      } else {
        const Frame done = top;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) bridges.push_back(*done.via);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace swapedge
