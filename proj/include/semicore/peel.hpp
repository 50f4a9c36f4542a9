#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semicore/digraph.hpp"
#include "semicore/rational.hpp"

namespace semicore {

/// Why a vertex left the graph: InMin when its indegree attains the current
/// minimum semidegree (preferred on ties), OutMin when only its outdegree does.
enum class RemovalReason { InMin, OutMin };

inline const char* to_string(RemovalReason r) { return r == RemovalReason::InMin ? "InMin" : "OutMin"; }

struct PeelStep {
  Vertex vertex = 0;
  std::size_t step_value = 0;  // min semidegree of the graph the vertex was removed from
  RemovalReason reason = RemovalReason::InMin;
  Degrees degrees;  // the vertex's degrees at removal time
};

/// Record of one greedy peeling run.
///
/// `steps` is in removal order. Removal step t (0-based) removes the vertex
/// with paper-order index n - t, so the last vertex removed is first in the
/// paper order v_1 < ... < v_n.
struct PeelTrace {
  std::size_t n = 0;
  std::vector<PeelStep> steps;
  std::size_t c = 0;             // max over steps of step_value
  std::size_t witness_step = 0;  // a removal step attaining c

  std::size_t paper_index(std::size_t removal_step) const { return n - removal_step; }

  /// v_1, ..., v_n: the reverse of removal order.
  std::vector<Vertex> paper_order() const {
    std::vector<Vertex> order;
    order.reserve(steps.size());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) order.push_back(it->vertex);
    return order;
  }

  /// Vertices still present when the witness step ran, sorted.
  VertexSet witness_set() const {
    VertexSet set;
    for (std::size_t t = witness_step; t < steps.size(); ++t) set.push_back(steps[t].vertex);
    std::sort(set.begin(), set.end());
    return set;
  }
};

namespace detail {

// Bucketed index over the live vertices. in_bucket[k] holds the vertices of
// current indegree k by label; out_bucket[k] holds (indegree, label) for
// current outdegree k, so its first entry is the OutMin tie-break winner.
class SemidegreeBuckets {
 public:
  explicit SemidegreeBuckets(const DiGraph& g)
      : out_deg_(g.n()), in_deg_(g.n()), in_bucket_(g.n()), out_bucket_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) {
      out_deg_[v] = g.out_degree(v);
      in_deg_[v] = g.in_degree(v);
      in_bucket_[in_deg_[v]].insert(v);
      out_bucket_[out_deg_[v]].emplace(in_deg_[v], v);
    }
    lo_in_ = lo_out_ = 0;
    settle();
  }

  bool empty() const { return lo_in_ >= in_bucket_.size(); }

  Degrees degrees(Vertex v) const { return {out_deg_[v], in_deg_[v]}; }

  // Selection rule: among vertices attaining the minimum semidegree, prefer
  // one whose indegree attains it (smallest label); otherwise the smallest
  // current indegree, then smallest label, among outdegree attainers.
  std::pair<Vertex, RemovalReason> select() const {
    const std::size_t delta = std::min(lo_in_, lo_out_);
    if (lo_in_ == delta) return {*in_bucket_[lo_in_].begin(), RemovalReason::InMin};
    return {out_bucket_[lo_out_].begin()->second, RemovalReason::OutMin};
  }

  std::size_t min_semidegree() const { return std::min(lo_in_, lo_out_); }

  void erase(Vertex v) {
    in_bucket_[in_deg_[v]].erase(v);
    out_bucket_[out_deg_[v]].erase({in_deg_[v], v});
  }

  void drop_in(Vertex v) {
    out_bucket_[out_deg_[v]].erase({in_deg_[v], v});
    in_bucket_[in_deg_[v]].erase(v);
    --in_deg_[v];
    in_bucket_[in_deg_[v]].insert(v);
    out_bucket_[out_deg_[v]].emplace(in_deg_[v], v);
    lo_in_ = std::min(lo_in_, in_deg_[v]);
  }

  void drop_out(Vertex v) {
    out_bucket_[out_deg_[v]].erase({in_deg_[v], v});
    --out_deg_[v];
    out_bucket_[out_deg_[v]].emplace(in_deg_[v], v);
    lo_out_ = std::min(lo_out_, out_deg_[v]);
  }

  void settle() {
    while (lo_in_ < in_bucket_.size() && in_bucket_[lo_in_].empty()) ++lo_in_;
    while (lo_out_ < out_bucket_.size() && out_bucket_[lo_out_].empty()) ++lo_out_;
  }

 private:
  std::vector<std::size_t> out_deg_;
  std::vector<std::size_t> in_deg_;
  std::vector<std::set<Vertex>> in_bucket_;
  std::vector<std::set<std::pair<std::size_t, Vertex>>> out_bucket_;
  std::size_t lo_in_ = 0;
  std::size_t lo_out_ = 0;
};

inline void finish_trace(PeelTrace& trace) {
  trace.c = 0;
  trace.witness_step = 0;
  // Latest step attaining c: the smallest witness set.
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    if (trace.steps[t].step_value >= trace.c) {
      trace.c = trace.steps[t].step_value;
      trace.witness_step = t;
    }
  }
}

}  // namespace detail

/// Greedy minimum-semidegree peeling: repeatedly remove a vertex attaining
/// the current minimum semidegree, until the graph is empty.
/// O((n + m) log n) through bucketed ordered sets.
inline PeelTrace peel_semidegree(const DiGraph& g) {
  if (g.is_empty()) throw Error(ErrorKind::EmptyGraph, "peeling needs at least one vertex");
  PeelTrace trace;
  trace.n = g.n();
  trace.steps.reserve(g.n());

  detail::SemidegreeBuckets buckets(g);
  std::vector<char> removed(g.n(), 0);
  while (!buckets.empty()) {
    auto [v, reason] = buckets.select();
    trace.steps.push_back({v, buckets.min_semidegree(), reason, buckets.degrees(v)});
    buckets.erase(v);
    removed[v] = 1;
    for (Vertex w : g.out(v))
      if (!removed[w]) buckets.drop_in(w);
    for (Vertex u : g.in(v))
      if (!removed[u]) buckets.drop_out(u);
    buckets.settle();
  }
  detail::finish_trace(trace);
  return trace;
}

/// Quadratic reference implementation of the same selection rule; kept for
/// differential testing of peel_semidegree.
inline PeelTrace peel_semidegree_naive(const DiGraph& g) {
  if (g.is_empty()) throw Error(ErrorKind::EmptyGraph, "peeling needs at least one vertex");
  const std::size_t n = g.n();
  std::vector<std::size_t> out(n), in(n);
  std::vector<char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    out[v] = g.out_degree(v);
    in[v] = g.in_degree(v);
  }
  PeelTrace trace;
  trace.n = n;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t delta = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v)
      if (alive[v]) delta = std::min({delta, out[v], in[v]});

    Vertex pick = n;
    RemovalReason reason = RemovalReason::InMin;
    for (Vertex v = 0; v < n && pick == n; ++v)
      if (alive[v] && in[v] == delta) pick = v;
    if (pick == n) {
      reason = RemovalReason::OutMin;
      for (Vertex v = 0; v < n; ++v)
        if (alive[v] && out[v] == delta && (pick == n || in[v] < in[pick])) pick = v;
    }
    trace.steps.push_back({pick, delta, reason, {out[pick], in[pick]}});
    alive[pick] = 0;
    for (Vertex w : g.out(pick)) --in[w];
    for (Vertex u : g.in(pick)) --out[u];
  }
  detail::finish_trace(trace);
  return trace;
}

struct MaxSemidegree {
  std::size_t c = 0;
  VertexSet witness;
};

/// c = max over peel steps of the minimum semidegree, with the vertex set of
/// a step attaining it. The witness induces a subgraph of semidegree >= c.
inline MaxSemidegree max_min_semidegree(const DiGraph& g) {
  PeelTrace trace = peel_semidegree(g);
  return {trace.c, trace.witness_set()};
}

namespace detail {

// Deletes violators of the (k,k)-core condition; `rank` decides which
// violator goes next (lowest rank first).
inline VertexSet semidegree_core_ranked(const DiGraph& g, std::size_t k, std::span<const std::size_t> rank) {
  const std::size_t n = g.n();
  std::vector<std::size_t> out(n), in(n);
  std::vector<char> alive(n, 1), queued(n, 0);
  std::set<std::pair<std::size_t, Vertex>> violators;
  auto consider = [&](Vertex v) {
    if (alive[v] && !queued[v] && (out[v] < k || in[v] < k)) {
      queued[v] = 1;
      violators.emplace(rank[v], v);
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    out[v] = g.out_degree(v);
    in[v] = g.in_degree(v);
  }
  for (Vertex v = 0; v < n; ++v) consider(v);
  while (!violators.empty()) {
    Vertex v = violators.begin()->second;
    violators.erase(violators.begin());
    alive[v] = 0;
    for (Vertex w : g.out(v))
      if (alive[w]) {
        --in[w];
        consider(w);
      }
    for (Vertex u : g.in(v))
      if (alive[u]) {
        --out[u];
        consider(u);
      }
  }
  VertexSet core;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) core.push_back(v);
  return core;
}

}  // namespace detail

/// Vertex set of the (k,k)-core: the unique maximal induced subgraph in which
/// every vertex has outdegree and indegree at least k. Possibly empty.
inline VertexSet semidegree_core(const DiGraph& g, std::size_t k) {
  std::vector<std::size_t> rank(g.n());
  for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
  return detail::semidegree_core_ranked(g, k, rank);
}

/// Same core, deleting violators in the order given by `deletion_order`
/// (a permutation of the vertices). The result does not depend on it.
inline VertexSet semidegree_core(const DiGraph& g, std::size_t k, std::span<const Vertex> deletion_order) {
  if (deletion_order.size() != g.n()) throw Error(ErrorKind::TraceMismatch, "deletion order is not a permutation");
  std::vector<std::size_t> rank(g.n(), g.n());
  for (std::size_t i = 0; i < deletion_order.size(); ++i) {
    Vertex v = deletion_order[i];
    if (v >= g.n() || rank[v] != g.n()) throw Error(ErrorKind::TraceMismatch, "deletion order is not a permutation");
    rank[v] = i;
  }
  return detail::semidegree_core_ranked(g, k, rank);
}

/// Neighbourhood sizes split by the trace's paper order: L is earlier in
/// v_1 < ... < v_n (removed later), R is later.
struct SplitDegrees {
  std::size_t out_left = 0;
  std::size_t out_right = 0;
  std::size_t in_left = 0;
  std::size_t in_right = 0;

  friend bool operator==(const SplitDegrees&, const SplitDegrees&) = default;
};

inline std::vector<SplitDegrees> peel_diagnostics(const DiGraph& g, const PeelTrace& trace) {
  const std::size_t n = g.n();
  if (trace.steps.size() != n) throw Error(ErrorKind::TraceMismatch, "trace length differs from vertex count");
  std::vector<std::size_t> pos(n, n);
  std::size_t i = 0;
  for (Vertex v : trace.paper_order()) {
    if (v >= n || pos[v] != n) throw Error(ErrorKind::TraceMismatch, "trace order is not a permutation");
    pos[v] = i++;
  }
  std::vector<SplitDegrees> result(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.out(v)) (pos[w] < pos[v] ? result[v].out_left : result[v].out_right)++;
    for (Vertex u : g.in(v)) (pos[u] < pos[v] ? result[v].in_left : result[v].in_right)++;
  }
  return result;
}

/// d(d+1)/(2n) exactly. Requires n >= 1 and d <= n-1.
inline BoundValue theorem_bound(std::size_t n, std::size_t d) {
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "n must be positive");
  if (d > n - 1) throw Error(ErrorKind::DegreeTooLarge, "d=" + std::to_string(d) + " exceeds n-1=" + std::to_string(n - 1));
  const auto dd = static_cast<std::int64_t>(d);
  return BoundValue(dd * (dd + 1), 2 * static_cast<std::int64_t>(n));
}

/// Bound with d = minimum outdegree of g.
inline BoundValue theorem_bound(const DiGraph& g) { return theorem_bound(g.n(), g.min_outdegree()); }

/// 2·n·c >= d(d+1), in integers.
inline bool bound_holds(std::size_t n, std::size_t d, std::size_t c) {
  const auto n128 = static_cast<unsigned __int128>(n);
  const auto d128 = static_cast<unsigned __int128>(d);
  return 2 * n128 * c >= d128 * (d128 + 1);
}

/// CSV: step_index, paper_index, vertex, step_value, reason.
inline std::string trace_csv(const PeelTrace& trace) {
  std::string out = "step_index,paper_index,vertex,step_value,reason\n";
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const PeelStep& s = trace.steps[t];
    out += std::to_string(t) + "," + std::to_string(trace.paper_index(t)) + "," + std::to_string(s.vertex) + "," +
           std::to_string(s.step_value) + "," + to_string(s.reason) + "\n";
  }
  return out;
}

}  // namespace semicore
