#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semicore/digraph.hpp"
#include "semicore/rational.hpp"
#include "semicore/rng.hpp"

namespace semicore {

/// Parameters of the three-part extremal tournament.
///
/// With d = 2kl - 1 the parts are A (l vertices), B (k·d) and C (d), for
/// n0 = (k+1)d + l vertices; any n beyond n0 is filled with padding P.
class TournamentParams {
 public:
  static TournamentParams make(std::size_t k, std::size_t l, std::size_t n) {
    if (k == 0 || l == 0) throw Error(ErrorKind::DomainError, "k and l must be positive");
    TournamentParams p;
    p.k_ = k;
    p.l_ = l;
    p.n_ = n;
    p.d_ = 2 * k * l - 1;
    p.n0_ = (k + 1) * p.d_ + l;
    if (n < p.n0_)
      throw Error(ErrorKind::TooFewVertices, "n=" + std::to_string(n) + " is below n0=" + std::to_string(p.n0_));
    return p;
  }

  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t n0() const { return n0_; }

  std::size_t size_a() const { return l_; }
  std::size_t size_b() const { return k_ * d_; }
  std::size_t size_c() const { return d_; }
  std::size_t size_p() const { return n_ - n0_; }

 private:
  TournamentParams() = default;
  std::size_t k_ = 0, l_ = 0, n_ = 0, d_ = 0, n0_ = 0;
};

enum class Part { A, B, C, P };

inline const char* to_string(Part p) {
  switch (p) {
    case Part::A: return "A";
    case Part::B: return "B";
    case Part::C: return "C";
    case Part::P: return "P";
  }
  return "?";
}

/// Half-open label range [begin, end).
struct PartRange {
  Vertex begin = 0;
  Vertex end = 0;
  std::size_t size() const { return end - begin; }
  bool contains(Vertex v) const { return begin <= v && v < end; }
};

struct ExtremalTournament {
  DiGraph graph;
  TournamentParams params;
  PartRange a, b, c, p;

  Part part_of(Vertex v) const {
    if (a.contains(v)) return Part::A;
    if (b.contains(v)) return Part::B;
    if (c.contains(v)) return Part::C;
    return Part::P;
  }

  /// Part boundaries and parameters as '#'-prefixed lines, so the block can
  /// be appended to an edge-list file without breaking the reader.
  std::string parts_block() const {
    std::string s = "# params k=" + std::to_string(params.k()) + " l=" + std::to_string(params.l()) +
                    " n=" + std::to_string(params.n()) + " d=" + std::to_string(params.d()) +
                    " n0=" + std::to_string(params.n0()) + "\n";
    auto line = [&](const char* name, const PartRange& r) {
      s += std::string("# part ") + name + " " + std::to_string(r.begin) + " " + std::to_string(r.end) + "\n";
    };
    line("A", a);
    line("B", b);
    line("C", c);
    line("P", p);
    return s;
  }
};

/// Builds the tournament with minimum outdegree d = 2kl-1 whose every
/// subgraph has minimum semidegree at most l.
///
/// Labels: A first, then B, C, P. Inside A, B and C the higher label beats
/// the lower. B beats A, A beats C. The C vertex of rank i (i = 1..d, rank i
/// having d-i out-neighbours inside C, i.e. label c.end - i) points at the
/// next i entries of S = l copies of B's order; every other B-C pair points
/// from B to C. Each padding vertex beats every earlier vertex.
///
/// B's order is ascending by label unless `b_order_seed` is given, in which
/// case it is a seeded shuffle.
inline ExtremalTournament construct_extremal_tournament(std::size_t k, std::size_t l, std::size_t n,
                                                        std::optional<std::uint64_t> b_order_seed = std::nullopt) {
  const TournamentParams params = TournamentParams::make(k, l, n);
  const std::size_t d = params.d();
  const PartRange a{0, params.size_a()};
  const PartRange b{a.end, a.end + params.size_b()};
  const PartRange c{b.end, b.end + params.size_c()};
  const PartRange p{c.end, n};

  std::vector<char> c_to_b(params.size_c() * params.size_b(), 0);
  auto c_to_b_at = [&](Vertex cv, Vertex bv) -> char& {
    return c_to_b[(cv - c.begin) * params.size_b() + (bv - b.begin)];
  };

  std::vector<Vertex> b_order;
  for (Vertex v = b.begin; v < b.end; ++v) b_order.push_back(v);
  if (b_order_seed) {
    Rng rng(*b_order_seed);
    rng.shuffle(std::span<Vertex>(b_order));
  }

  // S is consumed cyclically: position j of S is b_order[j mod |B|].
  std::size_t cursor = 0;
  for (std::size_t rank = 1; rank <= d; ++rank) {
    const Vertex cv = c.end - rank;
    for (std::size_t t = 0; t < rank; ++t, ++cursor) {
      const Vertex bv = b_order[cursor % b_order.size()];
      char& slot = c_to_b_at(cv, bv);
      if (slot) throw Error(ErrorKind::InternalBudgetError, "C vertex " + std::to_string(cv) + " hit B vertex twice");
      slot = 1;
    }
  }
  if (cursor != l * params.size_b())
    throw Error(ErrorKind::InternalBudgetError, "S not consumed exactly: " + std::to_string(cursor));

  std::vector<Arc> arcs;
  arcs.reserve(n * (n - 1) / 2);
  auto transitive = [&](const PartRange& r) {
    for (Vertex hi = r.begin; hi < r.end; ++hi)
      for (Vertex lo = r.begin; lo < hi; ++lo) arcs.emplace_back(hi, lo);
  };
  transitive(a);
  transitive(b);
  transitive(c);
  for (Vertex bv = b.begin; bv < b.end; ++bv)
    for (Vertex av = a.begin; av < a.end; ++av) arcs.emplace_back(bv, av);
  for (Vertex av = a.begin; av < a.end; ++av)
    for (Vertex cv = c.begin; cv < c.end; ++cv) arcs.emplace_back(av, cv);
  for (Vertex cv = c.begin; cv < c.end; ++cv)
    for (Vertex bv = b.begin; bv < b.end; ++bv) {
      if (c_to_b_at(cv, bv))
        arcs.emplace_back(cv, bv);
      else
        arcs.emplace_back(bv, cv);
    }
  for (Vertex pv = p.begin; pv < p.end; ++pv)
    for (Vertex earlier = 0; earlier < pv; ++earlier) arcs.emplace_back(pv, earlier);

  return {DiGraph::build(n, arcs), params, a, b, c, p};
}

struct PropBound {
  std::size_t l = 0;
  BoundValue cap;       // (1 + (k+1)/k^2) · d(d+1)/(2n)
  bool l_within_cap = false;
};

/// The certified upper bound l and the rational cap it is compared to.
/// l <= cap is guaranteed only at n = n0 (the cap shrinks with n while l
/// does not); there it is enforced, elsewhere only reported.
inline PropBound prop_upper_bound(const TournamentParams& params) {
  const auto k = static_cast<std::int64_t>(params.k());
  const auto d = static_cast<std::int64_t>(params.d());
  const auto l = static_cast<std::int64_t>(params.l());
  const BoundValue base(d * (d + 1), 2 * static_cast<std::int64_t>(params.n()));
  const BoundValue cap = (BoundValue(1) + BoundValue(k + 1, k * k)) * base;
  if (BoundValue(l) != BoundValue(d + 1, 2 * k))
    throw Error(ErrorKind::InvariantViolated, "l != (d+1)/(2k)");
  PropBound out{params.l(), cap, BoundValue(l) <= cap};
  if (params.n() == params.n0() && !out.l_within_cap)
    throw Error(ErrorKind::InvariantViolated, "l exceeds cap " + cap.str() + " at n = n0");
  return out;
}

}  // namespace semicore
