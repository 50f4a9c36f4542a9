#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semicore/errors.hpp"

namespace semicore {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no repeats

struct Degrees {
  std::size_t out = 0;
  std::size_t in = 0;

  std::size_t semi() const { return std::min(out, in); }
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

namespace detail {

struct ArcDefect {
  ErrorKind kind;
  std::size_t index;  // position of the first offending arc in the input
};

// Returns the earliest defect in input order: loops and range errors are
// positional, a duplicate is reported at its second occurrence.
inline std::optional<ArcDefect> find_arc_defect(std::size_t n, std::span<const Arc> arcs) {
  std::optional<ArcDefect> first;
  auto note = [&](ErrorKind kind, std::size_t index) {
    if (!first || index < first->index) first = ArcDefect{kind, index};
  };
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [u, w] = arcs[i];
    if (u >= n || w >= n) {
      note(ErrorKind::VertexOutOfRange, i);
      break;
    }
    if (u == w) {
      note(ErrorKind::LoopArc, i);
      break;
    }
  }
  std::vector<std::size_t> idx(first ? first->index : arcs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return arcs[a] != arcs[b] ? arcs[a] < arcs[b] : a < b;
  });
  for (std::size_t j = 1; j < idx.size(); ++j) {
    if (arcs[idx[j]] == arcs[idx[j - 1]]) note(ErrorKind::DuplicateArc, idx[j]);
  }
  return first;
}

inline std::string describe_arc(const Arc& a) {
  return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

}  // namespace detail

/// Loopless digraph on vertices 0..n-1 with mirrored, sorted out/in adjacency.
/// Immutable once built; concurrent reads are safe.
class DiGraph {
 public:
  /// Validating constructor. Requires n >= 1; rejects loops, duplicate
  /// ordered pairs and out-of-range endpoints. Antiparallel pairs are fine.
  static DiGraph build(std::size_t n, std::span<const Arc> arcs) {
    if (n == 0) throw Error(ErrorKind::EmptyGraph, "a digraph needs at least one vertex");
    if (auto defect = detail::find_arc_defect(n, arcs)) {
      const Arc& a = arcs[defect->index];
      throw Error(defect->kind, "arc #" + std::to_string(defect->index) + " " + detail::describe_arc(a));
    }
    return DiGraph(n, arcs);
  }

  /// The graph with no vertices. Only reachable through this factory and
  /// induced_subgraph; semidegree operations reject it.
  static DiGraph empty() { return DiGraph(0, {}); }

  std::size_t n() const noexcept { return out_.size(); }
  std::size_t m() const noexcept { return m_; }
  bool is_empty() const noexcept { return out_.empty(); }

  std::span<const Vertex> out(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in(Vertex v) const { return in_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_[check(v)].size(); }
  std::size_t in_degree(Vertex v) const { return in_[check(v)].size(); }

  Degrees degrees(Vertex v) const {
    check(v);
    return {out_[v].size(), in_[v].size()};
  }

  bool has_arc(Vertex u, Vertex w) const {
    if (u >= n() || w >= n()) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), w);
  }

  /// All arcs in ascending (tail, head) order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex w : out_[u]) result.emplace_back(u, w);
    return result;
  }

  std::size_t min_outdegree() const { return min_over([](const auto& adj) { return adj.size(); }, out_); }
  std::size_t min_indegree() const { return min_over([](const auto& adj) { return adj.size(); }, in_); }
  std::size_t min_semidegree() const { return std::min(min_outdegree(), min_indegree()); }

  /// Exactly one arc per unordered pair.
  bool is_tournament() const { return is_oriented() && m_ == n() * (n() - (n() > 0 ? 1 : 0)) / 2; }

  /// At most one arc per unordered pair.
  bool is_oriented() const {
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex w : out_[u])
        if (w > u && has_arc(w, u)) return false;
    return true;
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) { return a.out_ == b.out_; }

 private:
  DiGraph(std::size_t n, std::span<const Arc> arcs) : out_(n), in_(n), m_(arcs.size()) {
    for (auto [u, w] : arcs) {
      out_[u].push_back(w);
      in_[w].push_back(u);
    }
    for (auto& adj : out_) std::sort(adj.begin(), adj.end());
    for (auto& adj : in_) std::sort(adj.begin(), adj.end());
  }

  Vertex check(Vertex v) const {
    if (v >= n()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(n()));
    return v;
  }

  template <typename F>
  static std::size_t min_over(F f, const std::vector<std::vector<Vertex>>& adj) {
    if (adj.empty()) throw Error(ErrorKind::EmptyGraph, "minimum degree of the empty graph");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& a : adj) best = std::min(best, f(a));
    return best;
  }

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t m_ = 0;
};

inline DiGraph build_digraph(std::size_t n, std::span<const Arc> arcs) { return DiGraph::build(n, arcs); }
inline DiGraph build_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
  return DiGraph::build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

inline Degrees degrees(const DiGraph& g, Vertex v) { return g.degrees(v); }

/// Induced subgraph together with the map back to the parent's labels.
struct InducedSubgraph {
  DiGraph graph;
  std::vector<Vertex> original;  // original[new_label] = parent label
};

/// Keeps exactly the arcs with both ends in `vertices`; relabels in
/// ascending original order. Input order and repeats are irrelevant.
inline InducedSubgraph induced_subgraph(const DiGraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= g.n())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(keep.back()) + " with n=" + std::to_string(g.n()));
  if (keep.empty()) return {DiGraph::empty(), {}};

  constexpr Vertex absent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> relabel(g.n(), absent);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = i;

  std::vector<Arc> arcs;
  for (Vertex u : keep)
    for (Vertex w : g.out(u))
      if (relabel[w] != absent) arcs.emplace_back(relabel[u], relabel[w]);
  return {DiGraph::build(keep.size(), arcs), std::move(keep)};
}

/// Minimum of min(outdeg, indeg) over `vertices` inside the subgraph they
/// induce, without materializing it. Requires a nonempty set.
inline std::size_t induced_min_semidegree(const DiGraph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::EmptyGraph, "semidegree of an empty vertex set");
  std::vector<char> in_set(g.n(), 0);
  for (Vertex v : vertices) in_set.at(v) = 1;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v : vertices) {
    std::size_t out = 0, in = 0;
    for (Vertex w : g.out(v)) out += in_set[w];
    for (Vertex w : g.in(v)) in += in_set[w];
    best = std::min({best, out, in});
  }
  return best;
}

}  // namespace semicore
