#include "swapedge/abse_as.hpp"

#include <stdexcept>

#include "swapedge/detail/parallel.hpp"

namespace swapedge {

static_assert(sizeof(unsigned long) == sizeof(Length), "GMP ui conversions assume LP64");

namespace {

template <class Num>
Num from_length(Length x);
template <>
double from_length<double>(Length x) {
  return static_cast<double>(x);
}
template <>
mpq_class from_length<mpq_class>(Length x) {
  return mpq_class(static_cast<unsigned long>(x));
}

template <class Num>
Num reciprocal(Length d);
template <>
double reciprocal<double>(Length d) {
  return 1.0 / static_cast<double>(d);
}
template <>
mpq_class reciprocal<mpq_class>(Length d) {
  return mpq_class(1UL, static_cast<unsigned long>(d));
}

}  // namespace

template <class Num>
AvgAccumulators<Num> compute_accumulators(const FailureContext& ctx) {
  if (!ctx.swappable()) throw std::logic_error("average stretch undefined for a bridge");
  const Spt& t = ctx.tree();
  const auto verts = ctx.detached().vertices();
  const auto repl = ctx.replacement();
  const std::size_t count = verts.size();

  AvgAccumulators<Num> acc;
  acc.q_sub.resize(count);
  acc.m.resize(count);
  for (std::size_t i = 0; i < count; ++i) acc.q_sub[i] = reciprocal<Num>(repl[i]);
  for (std::size_t i = count; i-- > 1;) {
    acc.q_sub[ctx.local(t.parent(verts[i]))] += acc.q_sub[i];
  }
  acc.q = acc.q_sub[0];

  const Length root_dist = t.dist(verts[0]);
  Num m_root{};
  for (std::size_t i = 0; i < count; ++i) {
    m_root += from_length<Num>(t.dist(verts[i]) - root_dist) / from_length<Num>(repl[i]);
  }
  acc.m[0] = m_root;
  for (std::size_t i = 1; i < count; ++i) {
    const Vertex y = verts[i];
    const Num w = from_length<Num>(t.parent_weight(y));
    acc.m[i] = acc.m[ctx.local(t.parent(y))] + w * (acc.q - 2 * acc.q_sub[i]);
  }
  return acc;
}

template AvgAccumulators<double> compute_accumulators<double>(const FailureContext&);
template AvgAccumulators<mpq_class> compute_accumulators<mpq_class>(const FailureContext&);

mpq_class stretch_sum(const FailureContext& ctx, const AvgAccumulators<mpq_class>& acc,
                      const SwapEdge& f) {
  return acc.q * from_length<mpq_class>(f.key) + acc.m[ctx.local(f.y)];
}

double stretch_sum(const FailureContext& ctx, const AvgAccumulators<double>& acc,
                   const SwapEdge& f) {
  return acc.q * static_cast<double>(f.key) + acc.m[ctx.local(f.y)];
}

mpq_class lambda_of(const FailureContext& ctx, const AvgAccumulators<mpq_class>& acc,
                    const SwapEdge& f) {
  return stretch_sum(ctx, acc, f) / mpq_class(static_cast<unsigned long>(ctx.detached_count()));
}

double lambda_of(const FailureContext& ctx, const AvgAccumulators<double>& acc,
                 const SwapEdge& f) {
  return stretch_sum(ctx, acc, f) / static_cast<double>(ctx.detached_count());
}

mpq_class exact_lambda(const FailureContext& ctx, const SwapEdge& f) {
  const auto repl = ctx.replacement();
  const auto from_y = distances_from(ctx, f.y);
  mpz_class common = 1;
  for (const Length d : repl) {
    mpz_lcm_ui(common.get_mpz_t(), common.get_mpz_t(), static_cast<unsigned long>(d));
  }
  mpz_class total = 0, share;
  for (std::size_t i = 0; i < repl.size(); ++i) {
    mpz_divexact_ui(share.get_mpz_t(), common.get_mpz_t(), static_cast<unsigned long>(repl[i]));
    mpz_addmul_ui(total.get_mpz_t(), share.get_mpz_t(),
                  static_cast<unsigned long>(f.key + from_y[i]));
  }
  mpq_class out(total, common * static_cast<unsigned long>(repl.size()));
  out.canonicalize();
  return out;
}

AsRecord solve_abse_as_edge(const FailureContext& ctx, Arithmetic arithmetic) {
  AsRecord rec;
  rec.edge = ctx.edge();
  rec.detached = ctx.detached_count();
  if (!ctx.swappable()) return rec;

  // Candidates are sorted by y with one per y, so keeping the first strict
  // minimum implements the (y, x) tie-break.
  const auto candidates = ctx.candidates();
  if (arithmetic == Arithmetic::kExact) {
    const auto acc = compute_accumulators<mpq_class>(ctx);
    std::size_t best = 0;
    mpq_class best_sum = stretch_sum(ctx, acc, candidates[0]);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      mpq_class sum = stretch_sum(ctx, acc, candidates[i]);
      if (sum < best_sum) {
        best = i;
        best_sum = std::move(sum);
      }
    }
    rec.swap = candidates[best];
    rec.lambda = mpq_class(best_sum / mpq_class(static_cast<unsigned long>(rec.detached)));
    rec.lambda_approx = rec.lambda->get_d();
  } else {
    const auto acc = compute_accumulators<double>(ctx);
    std::size_t best = 0;
    double best_sum = stretch_sum(ctx, acc, candidates[0]);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      const double sum = stretch_sum(ctx, acc, candidates[i]);
      if (sum < best_sum) {
        best = i;
        best_sum = sum;
      }
    }
    rec.swap = candidates[best];
    rec.lambda = exact_lambda(ctx, candidates[best]);
    rec.lambda_approx = best_sum / static_cast<double>(rec.detached);
  }
  return rec;
}

std::vector<AsRecord> solve_abse_as(const Graph& g, const Spt& t, AsOptions opts) {
  const auto edges = t.tree_edges();
  std::vector<AsRecord> out(edges.size());
  detail::parallel_for(edges.size(), opts.workers, [&](std::size_t i) {
    out[i] = solve_abse_as_edge(build_context(g, t, edges[i]), opts.arithmetic);
  });
  return out;
}

}  // namespace swapedge
