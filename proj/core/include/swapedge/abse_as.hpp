#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "swapedge/failure.hpp"

namespace swapedge {

/// Per-failure sums that make the average stretch of any swap edge an O(1)
/// expression. Vectors are indexed like ctx.detached().vertices().
///
///   q        = sum over detached v of 1 / d_{G-e}(s, v)
///   q_sub[y] = the same sum restricted to T_y
///   m[y]     = sum over detached v of d_T(y, v) / d_{G-e}(s, v)
template <class Num>
struct AvgAccumulators {
  Num q{};
  std::vector<Num> q_sub;
  std::vector<Num> m;
};

/// q_sub by a postorder pass, m at the detached root by direct summation,
/// then every other m by a preorder pass of
///   m[y] = m[parent] + w(parent, y) * (q - 2 q_sub[y]).
/// Requires a swappable context.
template <class Num>
AvgAccumulators<Num> compute_accumulators(const FailureContext& ctx);

extern template AvgAccumulators<double> compute_accumulators<double>(const FailureContext&);
extern template AvgAccumulators<mpq_class> compute_accumulators<mpq_class>(
    const FailureContext&);

/// Sum of stretches over the detached subtree: key * q + m[y]. Same argmin
/// as lambda, without the 1/|U| factor.
mpq_class stretch_sum(const FailureContext& ctx, const AvgAccumulators<mpq_class>& acc,
                      const SwapEdge& f);
double stretch_sum(const FailureContext& ctx, const AvgAccumulators<double>& acc,
                   const SwapEdge& f);

/// Average stretch lambda(f) (the stretch sum divided by |U|).
mpq_class lambda_of(const FailureContext& ctx, const AvgAccumulators<mpq_class>& acc,
                    const SwapEdge& f);
double lambda_of(const FailureContext& ctx, const AvgAccumulators<double>& acc,
                 const SwapEdge& f);

/// lambda(f) by direct summation over a common denominator. Used to report
/// an exact value for the winner in fast mode.
mpq_class exact_lambda(const FailureContext& ctx, const SwapEdge& f);

enum class Arithmetic { kFast, kExact };

struct AsOptions {
  unsigned workers = 1;
  Arithmetic arithmetic = Arithmetic::kFast;
};

struct AsRecord {
  TreeEdge edge;
  std::optional<SwapEdge> swap;
  std::optional<mpq_class> lambda;  // exact, normalized
  double lambda_approx = 0.0;       // value the solver compared (fast mode) or lambda
  std::size_t detached = 0;
};

/// Argmin of the stretch sum over the filtered candidates, ties to the
/// smaller (y, x).
AsRecord solve_abse_as_edge(const FailureContext& ctx, Arithmetic arithmetic);

/// One record per tree edge, in tree-edge index order.
std::vector<AsRecord> solve_abse_as(const Graph& g, const Spt& t, AsOptions opts = {});

}  // namespace swapedge
