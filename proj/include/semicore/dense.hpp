#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semicore/digraph.hpp"
#include "semicore/errors.hpp"

namespace semicore {

enum class DenseMode { Digraph, Oriented };

inline const char* to_string(DenseMode m) { return m == DenseMode::Digraph ? "digraph" : "oriented"; }

namespace detail {

inline void require_alpha(double alpha, DenseMode mode) {
  const double hi = mode == DenseMode::Digraph ? 1.0 : 0.5;
  if (!(alpha > 0.0 && alpha <= hi))
    throw Error(ErrorKind::DomainError, "alpha=" + std::to_string(alpha) + " outside (0, " + std::to_string(hi) + "]");
}

}  // namespace detail

// Indegree-threshold bound for digraphs with minimum outdegree alpha·n.
inline double beta_digraph(double alpha) {
  detail::require_alpha(alpha, DenseMode::Digraph);
  return 1.0 - std::sqrt(std::max(0.0, 3.0 - 4.0 * alpha + alpha * alpha));
}

// Oriented-graph counterpart. Negative for small alpha; returned raw.
inline double beta_oriented(double alpha) {
  detail::require_alpha(alpha, DenseMode::Oriented);
  return 1.0 - alpha - std::sqrt(std::max(0.0, 3.0 - 8.0 * alpha + 4.0 * alpha * alpha));
}

inline double beta_term(double alpha, DenseMode mode) {
  return mode == DenseMode::Digraph ? beta_digraph(alpha) : beta_oriented(alpha);
}

/// Arc-count slack after removing a tau fraction with threshold beta:
/// tau²/2 + beta·tau + (1-tau) - alpha. Vanishes at tau = alpha - beta.
inline double removal_slack_digraph(double tau, double alpha, double beta) {
  return tau * tau / 2.0 + beta * tau + (1.0 - tau) - alpha;
}

/// Oriented version, using indegree < (1-alpha)n for the survivors.
inline double removal_slack_oriented(double tau, double alpha, double beta) {
  return tau * tau / 2.0 + beta * tau + (1.0 - tau) * (1.0 - alpha) - alpha;
}

inline double h_lower_bound(double alpha) { return std::max(alpha * alpha / 2.0, beta_digraph(alpha)); }
inline double h_hat_lower_bound(double alpha) { return std::max(alpha * alpha / 2.0, beta_oriented(alpha)); }

/// Where the digraph threshold branch overtakes alpha²/2: sqrt(2·sqrt2 + 2) - sqrt2.
inline double crossing_alpha() { return std::sqrt(2.0 * std::sqrt(2.0) + 2.0) - std::sqrt(2.0); }

/// x^4 + 4x^3 - 16x^2 + 24x - 8, whose positive root is the oriented crossing.
inline double crossing_quartic(double x) { return (((x + 4.0) * x - 16.0) * x + 24.0) * x - 8.0; }

/// Bisection for a sign change of f on [lo, hi], to absolute width tol.
template <typename F>
double bisect(F f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw Error(ErrorKind::ConvergenceError, "bisection bracket has no sign change");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > tol) throw Error(ErrorKind::ConvergenceError, "bisection did not reach tolerance");
  return lo + (hi - lo) / 2.0;
}

/// Positive root of the crossing quartic, bracketed in (0, 0.4528].
inline double crossing_alpha_oriented() { return bisect(crossing_quartic, 0.0, 0.4528, 1e-13); }

/// Result of indegree-threshold peeling.
struct DensePeelReport {
  std::size_t n = 0;
  double alpha = 0.0;  // measured min outdegree / n
  double threshold = 0.0;  // vertices with indegree strictly below this are removed
  std::vector<Vertex> removed;  // in removal order
  double tau0 = 0.0;
  VertexSet survivor;
  double realized_min_out_ratio = 0.0;
  double realized_min_in_ratio = 0.0;

  /// Smallest integer indegree a survivor can have.
  std::size_t integer_threshold() const {
    return threshold <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(threshold));
  }
};

namespace detail {

inline DensePeelReport indegree_threshold_peel_ranked(const DiGraph& g, double threshold, std::span<const std::size_t> rank) {
  if (g.is_empty()) throw Error(ErrorKind::EmptyGraph, "dense peel needs at least one vertex");
  if (!(threshold >= 0.0) || !std::isfinite(threshold))
    throw Error(ErrorKind::DomainError, "threshold must be finite and non-negative");
  const std::size_t n = g.n();
  const std::size_t need = threshold <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(threshold));

  std::vector<std::size_t> in(n);
  std::vector<char> alive(n, 1), queued(n, 0);
  std::set<std::pair<std::size_t, Vertex>> violators;
  for (Vertex v = 0; v < n; ++v) {
    in[v] = g.in_degree(v);
    if (in[v] < need) {
      queued[v] = 1;
      violators.emplace(rank[v], v);
    }
  }
  DensePeelReport report;
  report.n = n;
  report.alpha = static_cast<double>(g.min_outdegree()) / static_cast<double>(n);
  report.threshold = threshold;
  while (!violators.empty()) {
    const Vertex v = violators.begin()->second;
    violators.erase(violators.begin());
    alive[v] = 0;
    report.removed.push_back(v);
    for (Vertex w : g.out(v)) {
      if (!alive[w]) continue;
      --in[w];
      if (!queued[w] && in[w] < need) {
        queued[w] = 1;
        violators.emplace(rank[w], w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) report.survivor.push_back(v);
  report.tau0 = static_cast<double>(report.removed.size()) / static_cast<double>(n);
  if (!report.survivor.empty()) {
    std::size_t min_out = std::numeric_limits<std::size_t>::max();
    std::size_t min_in = std::numeric_limits<std::size_t>::max();
    for (Vertex v : report.survivor) {
      std::size_t out = 0;
      for (Vertex w : g.out(v)) out += alive[w];
      min_out = std::min(min_out, out);
      min_in = std::min(min_in, in[v]);
    }
    report.realized_min_out_ratio = static_cast<double>(min_out) / static_cast<double>(n);
    report.realized_min_in_ratio = static_cast<double>(min_in) / static_cast<double>(n);
  }
  return report;
}

}  // namespace detail

/// Repeatedly removes a vertex whose current indegree is strictly below
/// `threshold`, lowest label first among the current violators, until none
/// is left. The survivor set is the same for any removal order.
inline DensePeelReport indegree_threshold_peel(const DiGraph& g, double threshold) {
  std::vector<std::size_t> rank(g.n());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  return detail::indegree_threshold_peel_ranked(g, threshold, rank);
}

/// Same peel with violators taken in `order` (a permutation of the vertices).
inline DensePeelReport indegree_threshold_peel(const DiGraph& g, double threshold, std::span<const Vertex> order) {
  if (order.size() != g.n()) throw Error(ErrorKind::TraceMismatch, "removal order is not a permutation");
  std::vector<std::size_t> rank(g.n(), g.n());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.n() || rank[order[i]] != g.n())
      throw Error(ErrorKind::TraceMismatch, "removal order is not a permutation");
    rank[order[i]] = i;
  }
  return detail::indegree_threshold_peel_ranked(g, threshold, rank);
}

/// Spanning subgraph keeping the d lowest-labelled out-neighbours of every
/// vertex (d defaults to the minimum outdegree), making it outdegree-regular.
inline DiGraph trim_to_outdegree(const DiGraph& g, std::optional<std::size_t> d = std::nullopt) {
  const std::size_t keep = d.value_or(g.min_outdegree());
  if (keep > g.min_outdegree())
    throw Error(ErrorKind::DegreeTooLarge, "cannot trim to " + std::to_string(keep) + " above the minimum outdegree");
  std::vector<Arc> arcs;
  arcs.reserve(g.n() * keep);
  for (Vertex v = 0; v < g.n(); ++v) {
    auto out = g.out(v);
    for (std::size_t i = 0; i < keep; ++i) arcs.emplace_back(v, out[i]);
  }
  return DiGraph::build(g.n(), arcs);
}

struct SweepRow {
  double alpha = 0.0;
  double half_alpha_sq = 0.0;
  double beta_branch = 0.0;
  double envelope = 0.0;
  double ceiling = 0.0;
};

/// Lower-bound envelope max(alpha²/2, beta term) with its ceiling alpha.
inline std::vector<SweepRow> sweep(std::span<const double> alpha_grid, DenseMode mode) {
  std::vector<SweepRow> rows;
  rows.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    SweepRow row;
    row.alpha = alpha;
    row.half_alpha_sq = alpha * alpha / 2.0;
    row.beta_branch = beta_term(alpha, mode);
    row.envelope = std::max(row.half_alpha_sq, row.beta_branch);
    row.ceiling = alpha;
    rows.push_back(row);
  }
  return rows;
}

inline bool envelope_nondecreasing(std::span<const SweepRow> rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].alpha >= rows[i - 1].alpha && rows[i].envelope < rows[i - 1].envelope) return false;
  return true;
}

/// Grid from..to inclusive in steps of `step`, computed as from + i·step.
inline std::vector<double> alpha_grid(double from, double to, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorKind::DomainError, "step must be positive");
  if (!(to >= from)) throw Error(ErrorKind::DomainError, "empty range: to < from");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = from + static_cast<double>(i) * step;
  return grid;
}

}  // namespace semicore
