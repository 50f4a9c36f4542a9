#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "semicore/dense.hpp"
#include "semicore/digraph.hpp"
#include "semicore/extremal.hpp"
#include "semicore/generators.hpp"
#include "semicore/io.hpp"
#include "semicore/peel.hpp"
#include "semicore/rng.hpp"

// Command implementations behind the `semicore` executable. Each command
// writes its report to `out`, diagnostics (timing) to `err`, and returns the
// process exit code. Library errors propagate as semicore::Error.

namespace semicore::cli {

/// Reals in reports: 9 significant digits.
inline std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(9) << x;
  return os.str();
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

struct RandomSpec {
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = kDefaultSeed;
};

/// Either a graph file or a random minimum-outdegree instance.
struct GraphSource {
  std::optional<std::string> path;
  std::optional<RandomSpec> random;

  DiGraph load() const {
    if (random) return gen_random_min_outdegree(random->n, random->d, random->seed);
    if (path) return load_digraph(*path);
    throw Error(ErrorKind::IoError, "no input graph: give a file or --random n d seed");
  }
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Outcome of `peel`. The verdict is decided in integer arithmetic only.
struct RunReport {
  std::string command;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_out = 0;
  std::size_t min_in = 0;
  std::optional<std::uint64_t> seed;
  std::size_t c = 0;
  std::size_t d = 0;
  BoundValue bound;
  bool holds = false;
  double elapsed_ms = 0.0;

  // Timing is deliberately not part of the rendered block so identical runs
  // produce identical bytes.
  std::string render() const {
    std::ostringstream os;
    os << "command: " << command << "\n"
       << "n: " << n << "\n"
       << "m: " << m << "\n"
       << "min_outdegree: " << min_out << "\n"
       << "min_indegree: " << min_in << "\n";
    if (seed) os << "seed: " << *seed << "\n";
    const auto lhs = static_cast<unsigned long long>(2 * n * c);
    const auto rhs = static_cast<unsigned long long>(d * (d + 1));
    os << "c: " << c << "\n"
       << "d: " << d << "\n"
       << "bound: " << bound << "\n"
       << "check: 2*n*c = " << lhs << (holds ? " >= " : " < ") << "d*(d+1) = " << rhs << "\n"
       << "VERDICT: " << (holds ? "BOUND-HOLDS" : "BOUND-VIOLATED") << "\n";
    return os.str();
  }
};

struct PeelOptions {
  std::string command_line = "peel";
  GraphSource source;
  std::optional<std::size_t> d;  // defaults to the measured minimum outdegree
  std::optional<std::string> trace_path;
};

inline RunReport run_peel(const PeelOptions& opt) {
  Stopwatch clock;
  const DiGraph g = opt.source.load();
  RunReport r;
  r.command = opt.command_line;
  r.n = g.n();
  r.m = g.m();
  r.min_out = g.min_outdegree();
  r.min_in = g.min_indegree();
  if (opt.source.random) r.seed = opt.source.random->seed;
  if (opt.d && *opt.d > r.min_out)
    throw Error(ErrorKind::DegreeTooLarge,
                "--d " + std::to_string(*opt.d) + " exceeds the minimum outdegree " + std::to_string(r.min_out));
  r.d = opt.d.value_or(r.min_out);
  const PeelTrace trace = peel_semidegree(g);
  r.c = trace.c;
  r.bound = theorem_bound(r.n, r.d);
  r.holds = bound_holds(r.n, r.d, r.c);
  if (opt.trace_path) write_text_file(*opt.trace_path, trace_csv(trace));
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline int cmd_peel(const PeelOptions& opt, std::ostream& out, std::ostream& err) {
  const RunReport r = run_peel(opt);
  out << r.render();
  err << "elapsed_ms: " << format_real(r.elapsed_ms) << "\n";
  return r.holds ? 0 : 1;
}

struct CoreOptions {
  std::string command_line = "core";
  GraphSource source;
  std::optional<std::size_t> k;  // defaults to the peel value c
  std::optional<std::string> out_path;
};

inline int cmd_core(const CoreOptions& opt, std::ostream& out, std::ostream&) {
  const DiGraph g = opt.source.load();
  const std::size_t k = opt.k ? *opt.k : peel_semidegree(g).c;
  const VertexSet core = semidegree_core(g, k);
  out << "command: " << opt.command_line << "\n"
      << "n: " << g.n() << "\n"
      << "m: " << g.m() << "\n";
  if (opt.source.random) out << "seed: " << opt.source.random->seed << "\n";
  out << "k: " << k << "\n"
      << "core_size: " << core.size() << "\n"
      << "core: " << join(core) << "\n";
  if (opt.out_path && !core.empty()) write_text_file(*opt.out_path, serialize_digraph(induced_subgraph(g, core).graph));
  return 0;
}

struct ConstructOptions {
  std::string command_line = "construct";
  std::size_t k = 1;
  std::size_t l = 1;
  std::size_t n = 3;
  std::string out_path = "-";  // "-" writes graph and parts block to `out`
  std::optional<std::uint64_t> b_order_seed;
};

inline int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream&) {
  const ExtremalTournament t = construct_extremal_tournament(opt.k, opt.l, opt.n, opt.b_order_seed);
  const PropBound pb = prop_upper_bound(t.params);
  const std::string graph_text = serialize_digraph(t.graph);
  const std::string parts = t.parts_block();

  out << "command: " << opt.command_line << "\n"
      << "k: " << t.params.k() << "\n"
      << "l: " << pb.l << "\n"
      << "d: " << t.params.d() << "\n"
      << "n0: " << t.params.n0() << "\n"
      << "n: " << t.params.n() << "\n"
      << "arcs: " << t.graph.m() << "\n"
      << "cap: " << pb.cap << "\n"
      << "l_within_cap: " << (pb.l_within_cap ? "yes" : "no") << "\n";
  if (opt.b_order_seed) out << "b_order_seed: " << *opt.b_order_seed << "\n";
  if (opt.out_path == "-") {
    out << graph_text << parts;
  } else {
    write_text_file(opt.out_path, graph_text);
    write_text_file(opt.out_path + ".parts", parts);
    out << "graph_file: " << opt.out_path << "\n"
        << "parts_file: " << opt.out_path << ".parts\n"
        << parts;
  }
  return 0;
}

struct DensePeelOptions {
  std::string command_line = "dense-peel";
  GraphSource source;
  std::optional<double> alpha;  // unset: use the measured min outdegree / n
  DenseMode mode = DenseMode::Digraph;
  bool trim = false;
  std::optional<std::string> survivor_path;
};

/// Dense-regime guarantee for a run: removal fraction stays below
/// alpha - beta (+ 2/n integrality slack) and survivors keep their degrees.
/// Applies only when the graph meets the hypothesis (min outdegree >= alpha·n,
/// and oriented in oriented mode).
struct DenseVerdict {
  bool applicable = false;
  std::string reason;
  bool holds = true;
};

inline DenseVerdict judge_dense(const DiGraph& g, const DensePeelReport& rep, double alpha, double beta, DenseMode mode) {
  DenseVerdict v;
  const double n = static_cast<double>(g.n());
  if (static_cast<double>(g.min_outdegree()) < alpha * n) {
    v.reason = "min outdegree below alpha*n";
    return v;
  }
  if (mode == DenseMode::Oriented && !g.is_oriented()) {
    v.reason = "graph has antiparallel arcs";
    return v;
  }
  v.applicable = true;
  v.holds = rep.tau0 < alpha - beta + 2.0 / n;
  if (!rep.survivor.empty()) {
    const double min_in = rep.realized_min_in_ratio * n;
    const double min_out = rep.realized_min_out_ratio * n;
    v.holds = v.holds && min_in + 0.5 >= static_cast<double>(rep.integer_threshold()) &&
              min_out >= (alpha - rep.tau0) * n - 1.0;
  }
  return v;
}

inline int cmd_dense_peel(const DensePeelOptions& opt, std::ostream& out, std::ostream& err) {
  Stopwatch clock;
  if (opt.alpha) detail::require_alpha(*opt.alpha, opt.mode);
  DiGraph g = opt.source.load();
  if (opt.trim) g = trim_to_outdegree(g);
  const double n = static_cast<double>(g.n());
  const double measured = static_cast<double>(g.min_outdegree()) / n;
  const double alpha = opt.alpha.value_or(measured);
  const double beta = beta_term(alpha, opt.mode);
  const double threshold = std::max(0.0, beta) * n;
  const DensePeelReport rep = indegree_threshold_peel(g, threshold);
  const DenseVerdict verdict = judge_dense(g, rep, alpha, beta, opt.mode);

  out << "command: " << opt.command_line << "\n"
      << "mode: " << to_string(opt.mode) << "\n"
      << "n: " << g.n() << "\n"
      << "m: " << g.m() << "\n";
  if (opt.source.random) out << "seed: " << opt.source.random->seed << "\n";
  out << "trimmed: " << (opt.trim ? "yes" : "no") << "\n"
      << "measured_alpha: " << format_real(measured) << "\n"
      << "alpha: " << format_real(alpha) << "\n"
      << "beta: " << format_real(beta) << "\n"
      << "threshold: " << format_real(threshold) << "\n"
      << "threshold_rule: remove while indegree < threshold\n"
      << "integer_threshold: " << rep.integer_threshold() << "\n"
      << "removed_count: " << rep.removed.size() << "\n"
      << "tau0: " << format_real(rep.tau0) << "\n"
      << "tau0_bound: " << format_real(alpha - beta) << "\n"
      << "survivor_size: " << rep.survivor.size() << "\n"
      << "realized_min_out_ratio: " << format_real(rep.realized_min_out_ratio) << "\n"
      << "realized_min_in_ratio: " << format_real(rep.realized_min_in_ratio) << "\n"
      << "removed: " << join(rep.removed) << "\n"
      << "survivor: " << join(rep.survivor) << "\n";
  if (!verdict.applicable) {
    out << "guarantee: not-applicable (" << verdict.reason << ")\n";
  } else {
    out << "guarantee: applicable\n"
        << "VERDICT: " << (verdict.holds ? "GUARANTEE-HOLDS" : "GUARANTEE-VIOLATED") << "\n";
  }
  if (opt.survivor_path && !rep.survivor.empty())
    write_text_file(*opt.survivor_path, serialize_digraph(induced_subgraph(g, rep.survivor).graph));
  err << "elapsed_ms: " << format_real(clock.elapsed_ms()) << "\n";
  return verdict.holds ? 0 : 1;
}

struct SweepOptions {
  double from = 0.05;
  double to = 0.95;
  double step = 0.05;
  DenseMode mode = DenseMode::Digraph;
};

inline std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string s = "alpha,half_alpha_sq,beta_branch,envelope,ceiling\n";
  for (const SweepRow& r : rows) {
    s += format_real(r.alpha) + "," + format_real(r.half_alpha_sq) + "," + format_real(r.beta_branch) + "," +
         format_real(r.envelope) + "," + format_real(r.ceiling) + "\n";
  }
  return s;
}

inline int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream&) {
  const std::vector<double> grid = alpha_grid(opt.from, opt.to, opt.step);
  const std::vector<SweepRow> rows = sweep(grid, opt.mode);
  out << sweep_csv(rows);
  out << "# envelope_nondecreasing: " << (envelope_nondecreasing(rows) ? "yes" : "no") << "\n";
  return 0;
}

enum class GenKind { Random, Transitive, Bidirected, Oriented, Uniform };

struct GenOptions {
  GenKind kind = GenKind::Random;
  std::size_t n = 10;
  std::size_t d = 3;
  double p = 0.5;
  std::uint64_t seed = kDefaultSeed;
  std::string out_path = "-";
};

inline int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream&) {
  DiGraph g = DiGraph::empty();
  switch (opt.kind) {
    case GenKind::Random: g = gen_random_min_outdegree(opt.n, opt.d, opt.seed); break;
    case GenKind::Transitive: g = gen_transitive_tournament(opt.n); break;
    case GenKind::Bidirected: g = gen_complete_bidirected(opt.n); break;
    case GenKind::Oriented: g = gen_random_oriented(opt.n, opt.p, opt.seed); break;
    case GenKind::Uniform: g = gen_random_digraph(opt.n, opt.p, opt.seed); break;
  }
  const std::string text = serialize_digraph(g);
  if (opt.out_path == "-")
    out << text;
  else
    write_text_file(opt.out_path, text);
  return 0;
}

}  // namespace semicore::cli
