#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "swapedge/graph.hpp"

namespace swapedge {

/// Random bridgeless graph: a random Hamiltonian cycle plus m - n distinct
/// random chords, weights uniform in [1, wmax]. Deterministic in `seed`
/// across platforms (no std distributions are involved).
/// Throws std::invalid_argument unless 3 <= n, n <= m <= n(n-1)/2, wmax >= 1.
Graph generate_random_2ec(std::size_t n, std::size_t m, Weight wmax, std::uint64_t seed);

/// Parameters of one instance in a seeded random sweep.
struct RandomInstance {
  std::size_t n = 0;
  std::size_t m = 0;
  Weight wmax = 0;
  std::uint64_t seed = 0;
};

/// `count` instance descriptions with n uniform in [nmin, nmax] and m uniform
/// in [n, 3n] (capped at n(n-1)/2). Deterministic in `seed`.
/// Throws std::invalid_argument unless 3 <= nmin <= nmax and wmax >= 1.
std::vector<RandomInstance> random_sweep(std::size_t count, std::size_t nmin, std::size_t nmax,
                                         Weight wmax, std::uint64_t seed);

inline Graph generate(const RandomInstance& item) {
  return generate_random_2ec(item.n, item.m, item.wmax, item.seed);
}

/// Vertex layout of generate_lb_ms(D, eps, k).
struct LbMsLayout {
  std::size_t k;

  static constexpr Vertex source = 0;
  static constexpr Vertex a = 1;
  static constexpr Vertex b = 2;
  static constexpr Vertex x = 3;
  /// x_j for j in [2, k].
  Vertex x_j(std::size_t j) const { return static_cast<Vertex>(2 + j); }
  /// l_i for i in [1, k].
  Vertex leaf(std::size_t i) const { return static_cast<Vertex>(k + 2 + i); }
  std::size_t vertex_count() const { return 2 * k + 3; }
};

/// Max-stretch tight family. The failing edge is (a, b); the best swap edge
/// for it is (x, l_1) with max stretch (3D + eps) / (D + 2 eps).
/// Throws std::invalid_argument unless D > eps >= 1 and k >= 2.
Graph generate_lb_ms(Weight d, Weight eps, std::size_t k);

/// Vertex layout of generate_lb_gse(D, eps). b carries the smallest id so
/// that the tie at y (via b or directly from the source, both at distance D)
/// resolves to the tree edge (b, y).
struct LbGseLayout {
  static constexpr Vertex b = 0;
  static constexpr Vertex a = 1;
  static constexpr Vertex source = 2;
  static constexpr Vertex y = 3;
  static constexpr Vertex z = 4;
};

/// Good-swap-edge tight family: for the failing edge (a, b) the best swap
/// edge is (s, b) with max stretch (2D + eps) / D, the good swap edge is
/// (s, y) with max stretch 3D / (D + eps).
/// Throws std::invalid_argument unless D > eps >= 1.
Graph generate_lb_gse(Weight d, Weight eps);

/// Small fixed instance used throughout the tests, source 0.
Graph generate_gadget_a();

}  // namespace swapedge
