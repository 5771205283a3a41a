#include "swapedge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <CLI11.hpp>

#include "report.hpp"
#include "swapedge/abse_as.hpp"
#include "swapedge/abse_ms.hpp"
#include "swapedge/detail/parallel.hpp"
#include "swapedge/generators.hpp"
#include "swapedge/graph.hpp"
#include "swapedge/gse.hpp"
#include "swapedge/oracle.hpp"
#include "swapedge/tree.hpp"

namespace swapedge::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kOracleMaxVertices = 200;
constexpr std::size_t kExactAverageMaxVertices = 200;

// Bad input or arguments; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyParams {
  std::size_t n = 30;
  std::size_t m = 0;  // 0: 2n, capped
  Weight wmax = 1000;
  std::uint64_t seed = 1;
  Weight d = 1000;
  Weight eps = 1;
  std::size_t k = 10;
};

void add_family_options(CLI::App& cmd, FamilyParams& p) {
  cmd.add_option("--n", p.n, "vertex count (random)")->check(CLI::Range(3, 1 << 24));
  cmd.add_option("--m", p.m, "edge count (random, default 2n)");
  cmd.add_option("--wmax", p.wmax, "largest weight (random)")->check(CLI::Range(1LL, 1LL << 31));
  cmd.add_option("--seed", p.seed, "seed (random)");
  cmd.add_option("--D", p.d, "long distance D (lb-ms, lb-gse)");
  cmd.add_option("--eps", p.eps, "short distance eps (lb-ms, lb-gse)");
  cmd.add_option("--k", p.k, "fan size k (lb-ms)");
}

const std::vector<std::string> kFamilies{"random", "lb-ms", "lb-gse", "gadget-a"};

bool is_family(const std::string& name) {
  return std::find(kFamilies.begin(), kFamilies.end(), name) != kFamilies.end();
}

Graph build_family(const std::string& family, const FamilyParams& p) {
  try {
    if (family == "gadget-a") return generate_gadget_a();
    if (family == "lb-gse") return generate_lb_gse(p.d, p.eps);
    if (family == "lb-ms") return generate_lb_ms(p.d, p.eps, p.k);
    const std::size_t m = p.m != 0 ? p.m : std::min(2 * p.n, p.n * (p.n - 1) / 2);
    return generate_random_2ec(p.n, m, p.wmax, p.seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(family + ": " + e.what());
  }
}

Graph load_graph(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return parse_graph(in);
    std::ifstream file(path);
    if (!file) throw InputError(path + ": cannot open file");
    return parse_graph(file);
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::optional<mpq_class> max_of(std::optional<mpq_class> acc, const mpq_class& v) {
  if (!acc || v > *acc) return v;
  return acc;
}

// ---- solve ----

struct SolveArgs {
  std::string input;
  std::string criterion = "all";
  std::string format = "tsv";
  std::string arithmetic = "auto";
  unsigned workers = 1;
};

Arithmetic pick_arithmetic(const std::string& mode, const Graph& g) {
  if (mode == "exact") return Arithmetic::kExact;
  if (mode == "fast") return Arithmetic::kFast;
  return g.vertex_count() <= kExactAverageMaxVertices ? Arithmetic::kExact : Arithmetic::kFast;
}

Section ms_section(const Graph& g, const Spt& t, unsigned workers, Summary& summary) {
  Section s{"ms", {}};
  summary.has_mu = true;
  for (const MsRecord& r : solve_abse_ms(g, t, {workers})) {
    Row row{r.edge, r.swap, std::nullopt, r.detached};
    if (r.mu) {
      row.objective = r.mu->to_rational();
      summary.max_mu = max_of(summary.max_mu, *row.objective);
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

Section as_section(const Graph& g, const Spt& t, unsigned workers, Arithmetic arithmetic,
                   Summary& summary) {
  Section s{"as", {}};
  summary.has_lambda = true;
  for (AsRecord& r : solve_abse_as(g, t, {workers, arithmetic})) {
    if (r.lambda) summary.max_lambda = max_of(summary.max_lambda, *r.lambda);
    s.rows.push_back(Row{r.edge, r.swap, std::move(r.lambda), r.detached});
  }
  return s;
}

// gse rows carry mu(g); the footer carries the worst mu(g) / mu*.
Section gse_section(const Graph& g, const Spt& t, unsigned workers, Summary& summary) {
  Section s{"gse", {}};
  summary.has_ratio = true;
  GseEvaluation ev = evaluate_gse(g, t, {workers});
  summary.max_gse_ratio = ev.max_ratio;
  for (const GseRecord& r : ev.records) {
    Row row{r.edge, r.good, std::nullopt, r.detached};
    if (r.mu_good) row.objective = r.mu_good->to_rational();
    s.rows.push_back(std::move(row));
  }
  return s;
}

int cmd_solve(const SolveArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(a.input, in);
  const Spt t = build_spt(g);
  Summary summary;
  std::vector<Section> sections;
  const bool all = a.criterion == "all";
  if (all || a.criterion == "ms") sections.push_back(ms_section(g, t, a.workers, summary));
  if (all || a.criterion == "as") {
    sections.push_back(as_section(g, t, a.workers, pick_arithmetic(a.arithmetic, g), summary));
  }
  if (all || a.criterion == "gse") sections.push_back(gse_section(g, t, a.workers, summary));
  if (a.format == "json") {
    write_json(out, sections, summary);
  } else {
    write_tsv(out, sections, summary);
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string target;
  std::string family;
  std::size_t count = 1;
  std::size_t nmin = 5;
  std::size_t nmax = 60;
  FamilyParams params;
  unsigned workers = 1;
};

struct Instance {
  std::string label;
  Graph graph;
};

std::vector<Instance> verify_instances(const VerifyArgs& a, std::istream& in) {
  std::string family = a.family;
  if (!a.target.empty()) {
    if (!family.empty()) throw InputError("give either a target or --family, not both");
    if (is_family(a.target)) {
      family = a.target;
    } else {
      return {{a.target, load_graph(a.target, in)}};
    }
  }
  if (family.empty()) throw InputError("verify needs a graph file or a family");
  if (!is_family(family)) throw InputError("unknown family " + family);
  std::vector<Instance> out;
  if (family != "random") {
    out.push_back({family, build_family(family, a.params)});
    return out;
  }
  if (a.nmax > kOracleMaxVertices) throw InputError("--nmax exceeds the oracle limit of 200");
  std::vector<RandomInstance> sweep;
  try {
    sweep = random_sweep(a.count, a.nmin, a.nmax, a.params.wmax, a.params.seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("random sweep: ") + e.what());
  }
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    std::ostringstream label;
    label << "random#" << i << "(n=" << sweep[i].n << ",m=" << sweep[i].m
          << ",seed=" << sweep[i].seed << ")";
    out.push_back({label.str(), generate(sweep[i])});
  }
  return out;
}

template <class T>
std::optional<mpq_class> as_rational(const std::optional<T>& v) {
  if (!v) return std::nullopt;
  if constexpr (std::is_same_v<T, StretchValue>) {
    return v->to_rational();
  } else {
    return *v;
  }
}

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
  const std::vector<Instance> instances = verify_instances(a, in);
  for (const Instance& inst : instances) {
    if (inst.graph.vertex_count() > kOracleMaxVertices) {
      throw InputError(inst.label + ": more than 200 vertices, too large for the oracle");
    }
  }
  std::size_t tree_edges = 0;
  std::size_t failures = 0;
  std::optional<mpq_class> max_mu, max_lambda, max_mu_good, max_ratio;
  for (const Instance& inst : instances) {
    const oracle::DiscrepancyReport r = oracle::verify(inst.graph, {a.workers});
    tree_edges += r.tree_edges;
    for (const oracle::Discrepancy& d : r.discrepancies) {
      out << "discrepancy\t" << inst.label << '\t' << d.edge.parent << '\t' << d.edge.child << '\t'
          << oracle::to_string(d.check) << '\t' << d.detail << '\n';
      ++failures;
    }
    if (auto v = as_rational(r.max_mu)) max_mu = max_of(max_mu, *v);
    if (r.max_lambda) max_lambda = max_of(max_lambda, *r.max_lambda);
    if (auto v = as_rational(r.max_mu_good)) max_mu_good = max_of(max_mu_good, *v);
    if (r.max_ratio) max_ratio = max_of(max_ratio, *r.max_ratio);
  }
  out << "instances\t" << instances.size() << '\n';
  out << "tree_edges\t" << tree_edges << '\n';
  out << "discrepancies\t" << failures << '\n';
  write_value_line(out, "max_mu", max_mu);
  write_value_line(out, "max_lambda", max_lambda);
  write_value_line(out, "max_mu_good", max_mu_good);
  write_value_line(out, "max_gse_ratio", max_ratio);
  out << (failures == 0 ? "PASS" : "FAIL") << '\n';
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

// ---- bench ----

struct BenchArgs {
  std::string input;
  std::string criterion = "all";
  std::string arithmetic = "auto";
  unsigned workers = 1;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct PhaseTimes {
  double dijkstra = 0;
  double solver = 0;
};

// Per-failure phases summed over all tree edges (so they exceed wall time
// when workers > 1).
template <class Solve>
PhaseTimes time_per_failure(const Graph& g, const Spt& t, unsigned workers, Solve solve) {
  const auto edges = t.tree_edges();
  std::vector<PhaseTimes> slots(edges.size());
  detail::parallel_for(edges.size(), workers, [&](std::size_t i) {
    auto start = Clock::now();
    const ShortestPaths sp = dijkstra(g, g.source(), edges[i].id);
    slots[i].dijkstra = ms_since(start);
    start = Clock::now();
    const FailureContext ctx = build_context(g, t, edges[i], sp.dist);
    solve(ctx);
    slots[i].solver = ms_since(start);
  });
  PhaseTimes total;
  for (const PhaseTimes& p : slots) {
    total.dijkstra += p.dijkstra;
    total.solver += p.solver;
  }
  return total;
}

void write_phase(std::ostream& out, std::string_view criterion, std::string_view phase, double ms) {
  out << criterion << '\t' << phase << '\t' << std::fixed << std::setprecision(3) << ms << '\n';
}

int cmd_bench(const BenchArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(a.input, in);
  const Arithmetic arithmetic = pick_arithmetic(a.arithmetic, g);
  out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << " workers=" << a.workers << '\n';
  out << "# criterion\tphase\tmilliseconds\n";
  auto start = Clock::now();
  const Spt t = build_spt(g);
  write_phase(out, "-", "spt", ms_since(start));
  const bool all = a.criterion == "all";
  if (all || a.criterion == "ms") {
    start = Clock::now();
    const PhaseTimes p = time_per_failure(
        g, t, a.workers, [](const FailureContext& ctx) { solve_abse_ms_edge(ctx); });
    write_phase(out, "ms", "dijkstra_total", p.dijkstra);
    write_phase(out, "ms", "solver_total", p.solver);
    write_phase(out, "ms", "wall", ms_since(start));
  }
  if (all || a.criterion == "as") {
    start = Clock::now();
    const PhaseTimes p = time_per_failure(
        g, t, a.workers, [&](const FailureContext& ctx) { solve_abse_as_edge(ctx, arithmetic); });
    write_phase(out, "as", "dijkstra_total", p.dijkstra);
    write_phase(out, "as", "solver_total", p.solver);
    write_phase(out, "as", "wall", ms_since(start));
  }
  if (all || a.criterion == "gse") {
    start = Clock::now();
    solve_gse_fast(g, t);
    const double elapsed = ms_since(start);
    write_phase(out, "gse", "solver_total", elapsed);
    write_phase(out, "gse", "wall", elapsed);
  }
  return kExitOk;
}

// ---- gen ----

int cmd_gen(const std::string& family, const FamilyParams& p, std::ostream& out) {
  out << render_graph(build_family(family, p));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Best and good swap edges of shortest-path trees"};
  app.name("swapedge");
  app.require_subcommand(1);

  const auto criteria = CLI::IsMember({"ms", "as", "gse", "all"});
  const auto arithmetic_modes = CLI::IsMember({"auto", "exact", "fast"});
  const auto worker_range = CLI::Range(1U, 1024U);

  std::string gen_family;
  FamilyParams gen_params;
  CLI::App* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("family", gen_family, "random | lb-ms | lb-gse | gadget-a")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  add_family_options(*gen, gen_params);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "best and good swap edges for every tree edge");
  solve->add_option("input", solve_args.input, "graph file, - for stdin")->required();
  solve->add_option("--criterion,-c", solve_args.criterion)->check(criteria);
  solve->add_option("--format,-f", solve_args.format)->check(CLI::IsMember({"tsv", "json"}));
  solve->add_option("--arithmetic", solve_args.arithmetic, "average-stretch arithmetic")
      ->check(arithmetic_modes);
  solve->add_option("--parallel,-j", solve_args.workers, "worker threads")->check(worker_range);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "compare every solver with the brute force");
  verify->add_option("target", verify_args.target, "graph file or family name");
  verify->add_option("--family", verify_args.family)->check(CLI::IsMember(kFamilies));
  verify->add_option("--count", verify_args.count, "instances in a random sweep");
  verify->add_option("--nmin", verify_args.nmin, "smallest n in a random sweep");
  verify->add_option("--nmax", verify_args.nmax, "largest n in a random sweep");
  add_family_options(*verify, verify_args.params);
  verify->add_option("--parallel,-j", verify_args.workers, "worker threads")->check(worker_range);

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "phase timings");
  bench->add_option("input", bench_args.input, "graph file, - for stdin")->required();
  bench->add_option("--criterion,-c", bench_args.criterion)->check(criteria);
  bench->add_option("--arithmetic", bench_args.arithmetic)->check(arithmetic_modes);
  bench->add_option("--parallel,-j", bench_args.workers, "worker threads")->check(worker_range);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_family, gen_params, out);
    if (solve->parsed()) return cmd_solve(solve_args, in, out);
    if (verify->parsed()) return cmd_verify(verify_args, in, out);
    if (bench->parsed()) return cmd_bench(bench_args, in, out);
  } catch (const InputError& e) {
    err << "swapedge: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace swapedge::cli
