#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "semicore/commands.hpp"
#include "semicore/dense.hpp"
#include "semicore/extremal.hpp"
#include "semicore/generators.hpp"
#include "semicore/oracle.hpp"
#include "semicore/peel.hpp"
#include "semicore/rng.hpp"

// Property checks over generated instances. The acceptance suite runs them at
// full scale; `semicore verify` runs them at a user-chosen scale.

namespace semicore::verify {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0: no limit enforced
};

struct Scale {
  std::size_t exhaustive_max_n = 4;  // every arc subset for n <= this
  std::size_t sampled_min_n = 4;
  std::size_t sampled_max_n = 10;
  std::size_t samples_per_n = 10000;
  std::size_t theorem_graphs = 500;
  std::vector<std::size_t> theorem_ns = {50, 200, 1000};
  std::size_t dense_alpha_samples = 1000;
  std::size_t dense_seeds = 20;
  std::size_t core_graphs = 100;
  std::size_t core_orders = 50;
  std::size_t core_n = 30;
  std::uint64_t seed = kDefaultSeed;
  bool enforce_time_limits = false;
};

inline Scale acceptance_scale(std::uint64_t seed = kDefaultSeed) {
  Scale s;
  s.seed = seed;
  s.enforce_time_limits = true;
  return s;
}

namespace detail {

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) {
      if (!text_.empty()) text_ += "; ";
      text_ += what;
    }
  }
  std::size_t count() const { return count_; }
  std::string summary(const std::string& ok) const {
    return count_ == 0 ? ok : std::to_string(count_) + " failure(s): " + text_;
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

inline CheckResult timed(std::string id, std::string name, double limit, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{std::move(id), std::move(name), false, "", 0.0, limit};
  try {
    auto [ok, detail] = body();
    r.passed = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.time_limit > 0.0 && r.seconds >= r.time_limit) {
    r.passed = false;
    r.detail += " (over time limit)";
  }
  return r;
}

inline std::size_t ceil_sqrt(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return r;
}

}  // namespace detail

/// Peel value equals the exhaustive maximum over induced subgraphs; the peel
/// witness really has semidegree >= c.
inline CheckResult check_oracle_equivalence(const Scale& s) {
  return detail::timed("1", "oracle equivalence", s.enforce_time_limits ? 60.0 : 0.0, [&] {
    detail::Failures fails;
    std::size_t graphs = 0;
    auto compare = [&](const DiGraph& g, const std::string& label) {
      ++graphs;
      const PeelTrace trace = peel_semidegree(g);
      const BruteForceResult brute = brute_max_min_semidegree(g);
      if (trace.c != brute.c) {
        fails.add(label + ": peel c=" + std::to_string(trace.c) + " brute c=" + std::to_string(brute.c));
        return;
      }
      if (induced_min_semidegree(g, trace.witness_set()) < trace.c) fails.add(label + ": witness below c");
    };
    for (std::size_t n = 1; n <= s.exhaustive_max_n; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
      for (std::uint64_t mask = 0; mask < total; ++mask)
        compare(digraph_from_mask(n, mask), "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
    Rng rng(s.seed);
    for (std::size_t n = s.sampled_min_n; n <= s.sampled_max_n; ++n) {
      for (std::size_t i = 0; i < s.samples_per_n; ++i) {
        const double p = rng.uniform01();
        const std::uint64_t seed = rng.next();
        compare(gen_random_digraph(n, p, seed), "n=" + std::to_string(n) + " p=" + cli::format_real(p));
      }
    }
    return std::pair{fails.count() == 0, fails.summary(std::to_string(graphs) + " graphs agree")};
  });
}

/// 2·n·c >= d(d+1) on random graphs with every outdegree exactly d.
inline CheckResult check_theorem_inequality(const Scale& s) {
  return detail::timed("2", "lower bound 2nc >= d(d+1)", s.enforce_time_limits ? 30.0 : 0.0, [&] {
    struct Config {
      std::size_t n, d;
    };
    std::vector<Config> configs;
    for (std::size_t n : s.theorem_ns)
      for (std::size_t d : {detail::ceil_sqrt(2 * n), (n + 9) / 10, (n + 2) / 3}) configs.push_back({n, d});
    detail::Failures fails;
    Rng rng(s.seed ^ 0x7468656f72656dULL);
    std::size_t min_margin_num = SIZE_MAX;
    for (std::size_t i = 0; i < s.theorem_graphs; ++i) {
      const Config cfg = configs[i % configs.size()];
      const std::uint64_t seed = rng.next();
      const DiGraph g = gen_random_min_outdegree(cfg.n, cfg.d, seed);
      const std::string label = "n=" + std::to_string(cfg.n) + " d=" + std::to_string(cfg.d) + " seed=" + std::to_string(seed);
      if (g.min_outdegree() != cfg.d) fails.add(label + ": generator min outdegree " + std::to_string(g.min_outdegree()));
      const std::size_t c = peel_semidegree(g).c;
      if (!bound_holds(cfg.n, cfg.d, c)) fails.add(label + ": c=" + std::to_string(c));
      else min_margin_num = std::min(min_margin_num, 2 * cfg.n * c - cfg.d * (cfg.d + 1));
    }
    return std::pair{fails.count() == 0,
                     fails.summary(std::to_string(s.theorem_graphs) + " graphs over " + std::to_string(configs.size()) +
                                   " (n,d) configs, min 2nc-d(d+1) = " + std::to_string(min_margin_num))};
  });
}

/// Structural facts of one extremal tournament; returns failures via `fails`.
inline void audit_extremal(const ExtremalTournament& t, detail::Failures& fails) {
  const TournamentParams& p = t.params;
  const std::string label =
      "(k,l,n)=(" + std::to_string(p.k()) + "," + std::to_string(p.l()) + "," + std::to_string(p.n()) + ")";
  const DiGraph& g = t.graph;
  if (!g.is_tournament()) fails.add(label + ": not a tournament");
  if (g.min_outdegree() != p.d()) fails.add(label + ": min outdegree " + std::to_string(g.min_outdegree()));
  for (Vertex v = t.b.begin; v < t.b.end; ++v) {
    std::size_t from_c = 0;
    for (Vertex u : g.in(v)) from_c += t.c.contains(u);
    if (from_c != p.l()) fails.add(label + ": B vertex " + std::to_string(v) + " has " + std::to_string(from_c) + " in-arcs from C");
  }
  for (std::size_t rank = 1; rank <= p.d(); ++rank) {
    const Vertex cv = t.c.end - rank;
    std::size_t to_b = 0, inside = 0;
    for (Vertex w : g.out(cv)) {
      to_b += t.b.contains(w);
      inside += t.c.contains(w);
    }
    if (to_b != rank || inside != p.d() - rank) fails.add(label + ": C rank " + std::to_string(rank) + " degrees off");
  }
  const std::size_t c = peel_semidegree(g).c;
  if (c > p.l()) fails.add(label + ": peel c=" + std::to_string(c) + " > l");
  const PropBound pb = prop_upper_bound(p);
  if (p.n() == p.n0() && !pb.l_within_cap) fails.add(label + ": l above cap " + pb.cap.str());
  if (BoundValue(static_cast<std::int64_t>(2 * p.k() * p.l())) != BoundValue(static_cast<std::int64_t>(p.d() + 1)))
    fails.add(label + ": 2kl != d+1");
}

inline CheckResult check_construction(const Scale& s) {
  return detail::timed("3", "extremal tournament construction", s.enforce_time_limits ? 10.0 : 0.0, [&] {
    detail::Failures fails;
    std::size_t built = 0;
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t l = 1; l <= 3; ++l) {
        const std::size_t n0 = TournamentParams::make(k, l, (k + 1) * (2 * k * l - 1) + l).n0();
        for (std::size_t n : {n0, n0 + 7}) {
          audit_extremal(construct_extremal_tournament(k, l, n), fails);
          ++built;
        }
      }
    for (auto [k, l, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 1, 3}, {2, 1, 10}}) {
      const ExtremalTournament t = construct_extremal_tournament(k, l, n);
      const BruteForceResult brute = brute_max_min_semidegree(t.graph);
      const std::size_t c = peel_semidegree(t.graph).c;
      if (brute.c > l || brute.c != c)
        fails.add("oracle (" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(n) +
                  "): brute c=" + std::to_string(brute.c) + " peel c=" + std::to_string(c));
    }
    return std::pair{fails.count() == 0, fails.summary(std::to_string(built) + " tournaments + 2 oracle cross-checks")};
  });
}

/// l / (d(d+1)/(2 n0)) for l = 2 stays under 1 + (k+1)/k² and falls toward 1.
inline CheckResult check_sharpness_trend(const Scale& s) {
  return detail::timed("4", "sharpness ratio trend", s.enforce_time_limits ? 5.0 : 0.0, [&] {
    detail::Failures fails;
    std::string ratios;
    std::optional<BoundValue> previous;
    for (std::int64_t k : {2, 5, 10}) {
      const TournamentParams p = TournamentParams::make(static_cast<std::size_t>(k), 2, (k + 1) * (4 * k - 1) + 2);
      const BoundValue ratio = BoundValue(2) / theorem_bound(p.n0(), p.d());
      const BoundValue limit = BoundValue(1) + BoundValue(k + 1, k * k);
      if (ratio > limit) fails.add("k=" + std::to_string(k) + ": ratio " + ratio.str() + " > " + limit.str());
      if (ratio <= BoundValue(1)) fails.add("k=" + std::to_string(k) + ": ratio " + ratio.str() + " <= 1");
      if (previous && !(ratio < *previous)) fails.add("k=" + std::to_string(k) + ": ratio not decreasing");
      previous = ratio;
      if (!ratios.empty()) ratios += ", ";
      ratios += "k=" + std::to_string(k) + ":" + ratio.str();
      const std::size_t c = peel_semidegree(construct_extremal_tournament(p.k(), 2, p.n0()).graph).c;
      if (c > 2) fails.add("k=" + std::to_string(k) + ": peel c=" + std::to_string(c) + " > l");
    }
    return std::pair{fails.count() == 0, fails.summary(ratios)};
  });
}

inline CheckResult check_dense_identities(const Scale& s) {
  return detail::timed("5", "dense closed forms and crossings", s.enforce_time_limits ? 1.0 : 0.0, [&] {
    detail::Failures fails;
    Rng rng(s.seed ^ 0x64656e7365ULL);
    double worst = 0.0;
    for (std::size_t i = 0; i < s.dense_alpha_samples; ++i) {
      const double a = 1.0 - rng.uniform01();  // (0, 1]
      const double b = beta_digraph(a);
      const double f = removal_slack_digraph(a - b, a, b);
      worst = std::max(worst, std::abs(f));
      if (std::abs(f) > 1e-10) fails.add("digraph alpha=" + cli::format_real(a) + " f=" + cli::format_real(f));
      const double ao = 0.5 * (1.0 - rng.uniform01());  // (0, 1/2]
      const double bo = beta_oriented(ao);
      const double fo = removal_slack_oriented(ao - bo, ao, bo);
      worst = std::max(worst, std::abs(fo));
      if (std::abs(fo) > 1e-10) fails.add("oriented alpha=" + cli::format_real(ao) + " f=" + cli::format_real(fo));
    }
    const long double closed = std::sqrt(2.0L * std::sqrt(2.0L) + 2.0L) - std::sqrt(2.0L);
    const double star = crossing_alpha();
    if (std::abs(static_cast<long double>(star) - closed) > 1e-12L) fails.add("crossing_alpha off closed form");
    if (std::round(star * 1e4) / 1e4 != 0.7832) fails.add("crossing_alpha does not round to 0.7832");
    if (std::abs(beta_digraph(star) - star * star / 2.0) > 1e-9) fails.add("branches differ at crossing_alpha");
    const double one = crossing_alpha_oriented();
    if (!(one < 0.4528)) fails.add("oriented crossing not below 0.4528");
    if (std::abs(crossing_quartic(one)) >= 1e-9) fails.add("quartic residual too large");
    if (std::abs(beta_oriented(one) - one * one / 2.0) > 1e-9) fails.add("branches differ at oriented crossing");
    return std::pair{fails.count() == 0,
                     fails.summary("max |f| = " + cli::format_real(worst) + ", alpha* = " + cli::format_real(star) +
                                   ", alpha1 = " + cli::format_real(one))};
  });
}

inline CheckResult check_dense_peel(const Scale& s) {
  return detail::timed("6", "dense indegree peel guarantee", s.enforce_time_limits ? 10.0 : 0.0, [&] {
    constexpr std::size_t n = 400, d = 340;
    const double alpha = static_cast<double>(d) / n;
    const double beta = beta_digraph(alpha);
    const double threshold = beta * n;
    detail::Failures fails;
    Rng rng(s.seed ^ 0x7065656cULL);
    double worst_tau = 0.0;
    for (std::size_t i = 0; i < s.dense_seeds; ++i) {
      const std::uint64_t seed = rng.next();
      const DiGraph g = gen_random_min_outdegree(n, d, seed);
      const DensePeelReport rep = indegree_threshold_peel(g, threshold);
      const std::string label = "seed=" + std::to_string(seed);
      worst_tau = std::max(worst_tau, rep.tau0);
      if (rep.survivor.empty()) {
        fails.add(label + ": empty survivor");
        continue;
      }
      if (!(rep.tau0 < alpha - beta + 2.0 / n)) fails.add(label + ": tau0=" + cli::format_real(rep.tau0));
      const auto need = static_cast<std::size_t>(std::ceil(threshold));
      const InducedSubgraph h = induced_subgraph(g, rep.survivor);
      if (h.graph.min_indegree() < need) fails.add(label + ": survivor indegree below ceil(beta n)");
      if (static_cast<double>(h.graph.min_outdegree()) < (alpha - rep.tau0) * n - 1.0)
        fails.add(label + ": survivor outdegree too small");
    }
    return std::pair{fails.count() == 0,
                     fails.summary(std::to_string(s.dense_seeds) + " seeds, max tau0 = " + cli::format_real(worst_tau) +
                                   " < " + cli::format_real(alpha - beta + 2.0 / n))};
  });
}

inline CheckResult check_determinism(const Scale& s) {
  return detail::timed("7", "byte-identical reruns", 0.0, [&] {
    detail::Failures fails;
    auto run_peel = [&] {
      std::ostringstream out, err;
      cli::PeelOptions opt;
      opt.command_line = "peel --random 200 20 " + std::to_string(s.seed);
      opt.source.random = cli::RandomSpec{200, 20, s.seed};
      cli::cmd_peel(opt, out, err);
      return out.str();
    };
    if (run_peel() != run_peel()) fails.add("peel output differs");

    auto run_construct = [&](const std::string& path) {
      std::ostringstream out, err;
      cli::ConstructOptions opt;
      opt.k = 2;
      opt.l = 2;
      opt.n = 40;
      opt.out_path = path;
      cli::cmd_construct(opt, out, err);
      return out.str();
    };
    if (run_construct("-") != run_construct("-")) fails.add("construct stdout differs");

    const auto dir = std::filesystem::temp_directory_path();
    const auto tag = std::to_string(s.seed) + "_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count());
    const std::string p1 = (dir / ("semicore_det_a_" + tag + ".txt")).string();
    const std::string p2 = (dir / ("semicore_det_b_" + tag + ".txt")).string();
    run_construct(p1);
    run_construct(p2);
    if (read_text_file(p1) != read_text_file(p2) || read_text_file(p1 + ".parts") != read_text_file(p2 + ".parts"))
      fails.add("construct files differ");
    for (const auto& p : {p1, p2, p1 + ".parts", p2 + ".parts"}) std::filesystem::remove(p);
    return std::pair{fails.count() == 0, fails.summary("peel and construct reproduce byte for byte")};
  });
}

inline CheckResult check_core_order_independence(const Scale& s) {
  return detail::timed("8", "core order independence", 0.0, [&] {
    detail::Failures fails;
    Rng rng(s.seed ^ 0x636f7265ULL);
    std::size_t nonempty = 0;
    for (std::size_t i = 0; i < s.core_graphs; ++i) {
      const double p = 0.1 + 0.4 * rng.uniform01();
      const DiGraph g = gen_random_digraph(s.core_n, p, rng.next());
      const std::size_t c = peel_semidegree(g).c;
      for (std::size_t k : {c, c + 1, c > 0 ? c - 1 : std::size_t{0}}) {
        const VertexSet reference = semidegree_core(g, k);
        nonempty += !reference.empty();
        std::vector<Vertex> order(g.n());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        for (std::size_t r = 0; r < s.core_orders; ++r) {
          rng.shuffle(std::span<Vertex>(order));
          if (semidegree_core(g, k, order) != reference) {
            fails.add("graph " + std::to_string(i) + " k=" + std::to_string(k));
            break;
          }
        }
      }
      if (semidegree_core(g, c).empty() || !semidegree_core(g, c + 1).empty())
        fails.add("graph " + std::to_string(i) + ": core at c / c+1 inconsistent with peel");
    }
    return std::pair{fails.count() == 0,
                     fails.summary(std::to_string(s.core_graphs) + " graphs x " + std::to_string(s.core_orders) +
                                   " orders, " + std::to_string(nonempty) + " nonempty cores")};
  });
}

inline std::vector<CheckResult> run_all(const Scale& s) {
  return {check_oracle_equivalence(s), check_theorem_inequality(s), check_construction(s), check_sharpness_trend(s),
          check_dense_identities(s),   check_dense_peel(s),         check_determinism(s),  check_core_order_independence(s)};
}

inline std::string format_result(const CheckResult& r, bool with_timing = true) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
  if (with_timing) {
    os << " (" << cli::format_real(r.seconds) << " s";
    if (r.time_limit > 0.0) os << ", limit " << r.time_limit << " s";
    os << ")";
  }
  os << ": " << r.detail;
  return os.str();
}

struct VerifyOptions {
  std::size_t max_n = 10;
  std::size_t samples = 100;
  std::uint64_t seed = kDefaultSeed;
};

/// Scale for `semicore verify`: exhaustive up to min(max_n, 4), `samples`
/// random graphs per n above that, and proportionally sized other checks.
inline Scale scale_for(const VerifyOptions& opt) {
  if (opt.max_n > kOracleDefaultLimit)
    throw Error(ErrorKind::TooLarge,
                "--max-n " + std::to_string(opt.max_n) + " exceeds the oracle limit " + std::to_string(kOracleDefaultLimit));
  if (opt.max_n == 0) throw Error(ErrorKind::DomainError, "--max-n must be positive");
  Scale s;
  s.seed = opt.seed;
  s.exhaustive_max_n = std::min<std::size_t>(opt.max_n, 4);
  s.sampled_min_n = s.exhaustive_max_n + 1;
  s.sampled_max_n = opt.max_n;
  s.samples_per_n = opt.samples;
  s.theorem_graphs = std::max<std::size_t>(opt.samples, 9);
  s.dense_alpha_samples = std::max<std::size_t>(opt.samples, 10);
  s.dense_seeds = std::max<std::size_t>(opt.samples / 5, 1);
  s.core_graphs = std::max<std::size_t>(opt.samples / 5, 1);
  s.core_orders = 10;
  return s;
}

// Timings go to `err` so that `out` is reproducible.
inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const Scale s = scale_for(opt);
  bool all = true;
  for (const CheckResult& r : run_all(s)) {
    out << format_result(r, false) << "\n";
    err << "check " << r.id << ": " << cli::format_real(r.seconds) << " s\n";
    all = all && r.passed;
  }
  out << "VERDICT: " << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : 1;
}

}  // namespace semicore::verify
