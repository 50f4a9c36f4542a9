#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "semicore/digraph.hpp"

namespace semicore {

inline constexpr std::size_t kOracleDefaultLimit = 20;

struct BruteForceResult {
  std::size_t c = 0;
  VertexSet best_set;  // lexicographically smallest set attaining c
};

namespace detail {

// Lexicographic comparison of the sorted label lists encoded by two masks.
inline bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const int low = std::countr_zero(diff);
  const std::uint32_t above = low >= 31 ? 0U : ~((2U << low) - 1U);
  // The set holding `low` is smaller unless the other set has nothing past
  // `low`, in which case the other one is a proper prefix.
  if ((a >> low) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace detail

/// Exhaustive maximum of the minimum semidegree over all nonempty induced
/// subgraphs. Induced subgraphs suffice: extra arcs inside a fixed vertex set
/// can only raise degrees. Subsets with at most c_best vertices are skipped,
/// since semidegree c needs c + 1 vertices.
inline BruteForceResult brute_max_min_semidegree(const DiGraph& g, std::size_t limit = kOracleDefaultLimit) {
  const std::size_t n = g.n();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "oracle needs at least one vertex");
  if (n > limit || n > 30)
    throw Error(ErrorKind::TooLarge, "n=" + std::to_string(n) + " exceeds oracle limit " + std::to_string(limit));

  std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : g.out(u)) {
      out_mask[u] |= 1U << w;
      in_mask[w] |= 1U << u;
    }

  std::size_t best_c = 0;
  std::uint32_t best_mask = 1;  // {0}: every singleton attains 0
  const std::uint32_t end = n == 32 ? 0U : (1U << n);
  for (std::uint32_t s = 1; s != end; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) < best_c + 1) continue;
    std::size_t value = n;
    for (std::uint32_t rest = s; rest != 0 && value >= best_c; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const auto out = static_cast<std::size_t>(std::popcount(out_mask[v] & s));
      const auto in = static_cast<std::size_t>(std::popcount(in_mask[v] & s));
      value = std::min({value, out, in});
    }
    if (value > best_c || (value == best_c && detail::lex_less(s, best_mask))) {
      best_c = value;
      best_mask = s;
    }
  }

  BruteForceResult result;
  result.c = best_c;
  for (Vertex v = 0; v < n; ++v)
    if ((best_mask >> v) & 1U) result.best_set.push_back(v);
  return result;
}

}  // namespace semicore
