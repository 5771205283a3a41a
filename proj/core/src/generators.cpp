#include "swapedge/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace swapedge {

namespace {

// Uniform integer in [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined and would break cross-platform reproducibility.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

template <class T>
void shuffle_prefix(std::vector<T>& items, std::size_t count, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
    const std::size_t j = i + draw_below(rng, items.size() - i);
    std::swap(items[i], items[j]);
  }
}

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

void require_tight_params(Weight d, Weight eps) {
  if (eps < 1 || d <= eps) {
    throw std::invalid_argument("tight families need D > eps >= 1");
  }
  if (d > kMaxWeight / 2) {
    throw std::invalid_argument("D too large for the 2^31 weight cap");
  }
}

}  // namespace

Graph generate_random_2ec(std::size_t n, std::size_t m, Weight wmax, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random 2-edge-connected graph needs n >= 3");
  if (wmax < 1 || wmax > kMaxWeight) throw std::invalid_argument("wmax must be in [1, 2^31]");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m < n) throw std::invalid_argument("m must be at least n");
  if (m > max_edges) {
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                                std::to_string(max_edges));
  }

  std::mt19937_64 rng(seed);
  auto weight = [&] { return 1 + draw_below(rng, wmax); };

  std::vector<Vertex> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Vertex{0});
  shuffle_prefix(cycle, n, rng);

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> used;
  used.reserve(2 * m);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex u = cycle[i];
    const Vertex v = cycle[(i + 1) % n];
    edges.push_back({u, v, weight()});
    used.insert(pair_key(u, v));
  }

  const std::size_t chords = m - n;
  if (2 * m <= max_edges) {
    while (edges.size() < m) {
      const auto u = static_cast<Vertex>(draw_below(rng, n));
      const auto v = static_cast<Vertex>(draw_below(rng, n));
      if (u == v || !used.insert(pair_key(u, v)).second) continue;
      edges.push_back({u, v, weight()});
    }
  } else {
    std::vector<std::pair<Vertex, Vertex>> free_pairs;
    free_pairs.reserve(max_edges - n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!used.contains(pair_key(u, v))) free_pairs.emplace_back(u, v);
      }
    }
    shuffle_prefix(free_pairs, chords, rng);
    for (std::size_t i = 0; i < chords; ++i) {
      edges.push_back({free_pairs[i].first, free_pairs[i].second, weight()});
    }
  }
  return Graph(n, 0, std::move(edges));
}

std::vector<RandomInstance> random_sweep(std::size_t count, std::size_t nmin, std::size_t nmax,
                                         Weight wmax, std::uint64_t seed) {
  if (nmin < 3 || nmin > nmax) throw std::invalid_argument("need 3 <= nmin <= nmax");
  if (wmax < 1 || wmax > kMaxWeight) throw std::invalid_argument("wmax out of range");
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RandomInstance item;
    item.n = nmin + draw_below(rng, nmax - nmin + 1);
    item.m = std::min(item.n + draw_below(rng, 2 * item.n + 1), item.n * (item.n - 1) / 2);
    item.wmax = wmax;
    item.seed = rng();
    out.push_back(item);
  }
  return out;
}

Graph generate_lb_ms(Weight d, Weight eps, std::size_t k) {
  require_tight_params(d, eps);
  if (k < 2) throw std::invalid_argument("lb-ms family needs k >= 2");
  const LbMsLayout at{k};
  std::vector<Edge> edges;
  edges.push_back({at.source, at.a, 0});
  edges.push_back({at.a, at.b, 0});
  for (std::size_t i = 1; i <= k; ++i) edges.push_back({at.b, at.leaf(i), d});
  edges.push_back({at.source, at.x, d});
  for (std::size_t j = 2; j <= k; ++j) edges.push_back({at.source, at.x_j(j), d + eps});
  edges.push_back({at.x, at.leaf(1), eps});
  for (std::size_t j = 2; j <= k; ++j) edges.push_back({at.x_j(j), at.leaf(j), eps});
  return Graph(at.vertex_count(), at.source, std::move(edges));
}

Graph generate_lb_gse(Weight d, Weight eps) {
  require_tight_params(d, eps);
  using L = LbGseLayout;
  std::vector<Edge> edges{
      {L::source, L::a, 0},       {L::a, L::b, 0},       {L::b, L::y, d},
      {L::b, L::z, d},            {L::source, L::b, d + eps},
      {L::source, L::y, d},       {L::source, L::z, d + eps},
  };
  return Graph(5, L::source, std::move(edges));
}

Graph generate_gadget_a() {
  std::vector<Edge> edges{{0, 1, 1}, {1, 2, 4}, {1, 3, 6}, {0, 4, 1}, {4, 2, 5}, {4, 3, 7}};
  return Graph(5, 0, std::move(edges));
}

}  // namespace swapedge
