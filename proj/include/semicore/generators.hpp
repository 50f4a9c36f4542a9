#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "semicore/digraph.hpp"
#include "semicore/rng.hpp"

namespace semicore {

/// Every vertex gets exactly d distinct out-neighbours drawn uniformly
/// without replacement from the other n-1 vertices.
inline DiGraph gen_random_min_outdegree(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "n must be positive");
  if (d > n - 1) throw Error(ErrorKind::DegreeTooLarge, "d=" + std::to_string(d) + " exceeds n-1=" + std::to_string(n - 1));
  Rng rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(n * d);
  std::vector<Vertex> pool(n - 1);
  for (Vertex v = 0; v < n; ++v) {
    // pool = every vertex except v
    for (Vertex i = 0, w = 0; w < n; ++w)
      if (w != v) pool[i++] = w;
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t pick = j + rng.below(pool.size() - j);
      std::swap(pool[j], pool[pick]);
      arcs.emplace_back(v, pool[j]);
    }
  }
  return DiGraph::build(n, arcs);
}

/// Arc (j, i) for every i < j: the highest label is the source.
inline DiGraph gen_transitive_tournament(std::size_t n) {
  std::vector<Arc> arcs;
  arcs.reserve(n * (n - 1) / 2);
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) arcs.emplace_back(j, i);
  return DiGraph::build(n, arcs);
}

/// All n(n-1) ordered pairs.
inline DiGraph gen_complete_bidirected(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = 0; w < n; ++w)
      if (u != w) arcs.emplace_back(u, w);
  return DiGraph::build(n, arcs);
}

/// Each ordered pair present independently with probability p.
inline DiGraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = 0; w < n; ++w)
      if (u != w && rng.uniform01() < p) arcs.emplace_back(u, w);
  return DiGraph::build(n, arcs);
}

/// Orientation of G(n, p): each unordered pair gets an arc with probability
/// p, pointing either way with equal odds.
inline DiGraph gen_random_oriented(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w)
      if (rng.uniform01() < p) {
        if (rng.below(2) == 0)
          arcs.emplace_back(u, w);
        else
          arcs.emplace_back(w, u);
      }
  return DiGraph::build(n, arcs);
}

/// The digraph on n vertices whose arc set is the given bitmask over the
/// n(n-1) ordered pairs, enumerated row-major skipping the diagonal.
inline DiGraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Arc> arcs;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = 0; w < n; ++w) {
      if (u == w) continue;
      if ((mask >> bit) & 1U) arcs.emplace_back(u, w);
      ++bit;
    }
  return DiGraph::build(n, arcs);
}

}  // namespace semicore
