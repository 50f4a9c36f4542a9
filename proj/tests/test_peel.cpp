#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "semicore/generators.hpp"
#include "semicore/oracle.hpp"
#include "semicore/peel.hpp"

using namespace semicore;

namespace {

const DiGraph kTriangle = build_digraph(3, {{0, 1}, {1, 2}, {2, 0}});

// Mixed-density random graphs for property tests.
std::vector<DiGraph> random_graphs(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DiGraph> graphs;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.below(max_n);
    graphs.push_back(gen_random_digraph(n, rng.uniform01(), rng.next()));
  }
  return graphs;
}

// Recomputes every PeelTrace invariant from scratch.
void expect_trace_invariants(const DiGraph& g, const PeelTrace& t) {
  ASSERT_EQ(t.steps.size(), g.n());
  std::vector<Vertex> order = t.paper_order();
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v = 0; v < g.n(); ++v) ASSERT_EQ(sorted[v], v);

  std::size_t best = 0;
  for (std::size_t step = 0; step < t.steps.size(); ++step) {
    // G_i is induced by the vertices not yet removed.
    std::vector<Vertex> present;
    for (std::size_t s = step; s < t.steps.size(); ++s) present.push_back(t.steps[s].vertex);
    const std::size_t delta = induced_min_semidegree(g, present);
    const Vertex v = t.steps[step].vertex;
    std::size_t out = 0, in = 0;
    for (Vertex w : present) {
      out += g.has_arc(v, w);
      in += g.has_arc(w, v);
    }
    EXPECT_EQ(t.steps[step].step_value, delta);
    EXPECT_EQ(std::min(out, in), delta);
    EXPECT_EQ(t.steps[step].reason, in <= out ? RemovalReason::InMin : RemovalReason::OutMin);
    best = std::max(best, delta);
  }
  EXPECT_EQ(t.c, best);
  EXPECT_EQ(t.steps[t.witness_step].step_value, t.c);
}

}  // namespace

TEST(PeelSemidegree, Triangle) {
  const PeelTrace t = peel_semidegree(kTriangle);
  EXPECT_EQ(t.c, 1U);
  EXPECT_EQ(t.steps.front().step_value, 1U);
  for (const PeelStep& s : t.steps) EXPECT_LE(s.step_value, 1U);
  expect_trace_invariants(kTriangle, t);
}

TEST(PeelSemidegree, TransitiveRemovesSourcesByIndegree) {
  const PeelTrace t = peel_semidegree(gen_transitive_tournament(5));
  EXPECT_EQ(t.c, 0U);
  std::vector<Vertex> removal;
  for (const PeelStep& s : t.steps) {
    removal.push_back(s.vertex);
    EXPECT_EQ(s.reason, RemovalReason::InMin);
    EXPECT_EQ(s.degrees.in, 0U);
  }
  EXPECT_EQ(removal, (std::vector<Vertex>{4, 3, 2, 1, 0}));
}

TEST(PeelSemidegree, DigonAndSingleVertex) {
  EXPECT_EQ(peel_semidegree(build_digraph(2, {{0, 1}, {1, 0}})).c, 1U);
  EXPECT_EQ(peel_semidegree(build_digraph(1, {})).c, 0U);
  EXPECT_THROW(peel_semidegree(DiGraph::empty()), Error);
}

TEST(PeelSemidegree, OutMinTieBreakPrefersSmallIndegree) {
  // Vertex 0 has out 0 and in 2; vertex 3 has out 0 and in 1. No vertex has
  // indegree 0, so an OutMin vertex goes first: the one with smaller indegree.
  const DiGraph g = build_digraph(4, {{1, 0}, {2, 0}, {1, 2}, {2, 1}, {1, 3}});
  const PeelTrace t = peel_semidegree(g);
  EXPECT_EQ(t.steps[0].vertex, 3U);
  EXPECT_EQ(t.steps[0].reason, RemovalReason::OutMin);
  expect_trace_invariants(g, t);
}

TEST(PeelSemidegree, PaperIndexing) {
  const PeelTrace t = peel_semidegree(gen_transitive_tournament(4));
  EXPECT_EQ(t.paper_index(0), 4U);
  EXPECT_EQ(t.paper_index(3), 1U);
  EXPECT_EQ(t.paper_order(), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(PeelSemidegree, TraceInvariantsOnRandomGraphs) {
  for (const DiGraph& g : random_graphs(150, 14, 11)) expect_trace_invariants(g, peel_semidegree(g));
}

TEST(PeelSemidegree, BucketEngineMatchesNaiveStepForStep) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(60);
    const DiGraph g = i % 3 == 0 ? gen_random_min_outdegree(n, rng.below(n), rng.next())
                                 : gen_random_digraph(n, rng.uniform01(), rng.next());
    const PeelTrace fast = peel_semidegree(g);
    const PeelTrace slow = peel_semidegree_naive(g);
    ASSERT_EQ(fast.steps.size(), slow.steps.size());
    for (std::size_t s = 0; s < fast.steps.size(); ++s) {
      EXPECT_EQ(fast.steps[s].vertex, slow.steps[s].vertex);
      EXPECT_EQ(fast.steps[s].step_value, slow.steps[s].step_value);
      EXPECT_EQ(fast.steps[s].reason, slow.steps[s].reason);
    }
    EXPECT_EQ(fast.c, slow.c);
    EXPECT_EQ(fast.witness_step, slow.witness_step);
  }
}

TEST(MaxMinSemidegree, Examples) {
  const MaxSemidegree k4 = max_min_semidegree(gen_complete_bidirected(4));
  EXPECT_EQ(k4.c, 3U);
  EXPECT_EQ(k4.witness, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(max_min_semidegree(kTriangle).c, 1U);
  EXPECT_EQ(max_min_semidegree(gen_transitive_tournament(5)).c, 0U);
}

TEST(MaxMinSemidegree, AgreesWithOracle) {
  for (const DiGraph& g : random_graphs(400, 10, 21)) {
    ASSERT_EQ(max_min_semidegree(g).c, brute_max_min_semidegree(g).c);
  }
}

TEST(MaxMinSemidegree, WitnessAndCoreConsistency) {
  for (const DiGraph& g : random_graphs(200, 40, 5)) {
    const MaxSemidegree r = max_min_semidegree(g);
    EXPECT_GE(induced_min_semidegree(g, r.witness), r.c);
    EXPECT_FALSE(semidegree_core(g, r.c).empty());
    EXPECT_TRUE(semidegree_core(g, r.c + 1).empty());
    // The witness sits inside the c-core.
    const VertexSet core = semidegree_core(g, r.c);
    EXPECT_TRUE(std::includes(core.begin(), core.end(), r.witness.begin(), r.witness.end()));
  }
}

TEST(MaxMinSemidegree, AddingAnArcNeverLowersC) {
  Rng rng(8);
  for (const DiGraph& g : random_graphs(150, 25, 9)) {
    if (g.n() < 2) continue;
    const std::size_t c = max_min_semidegree(g).c;
    std::vector<Arc> arcs = g.arcs();
    const Vertex u = rng.below(g.n());
    Vertex w = rng.below(g.n() - 1);
    if (w >= u) ++w;
    if (g.has_arc(u, w)) continue;
    arcs.emplace_back(u, w);
    EXPECT_GE(max_min_semidegree(build_digraph(g.n(), arcs)).c, c);
  }
}

TEST(SemidegreeCore, Examples) {
  EXPECT_EQ(semidegree_core(kTriangle, 1), (VertexSet{0, 1, 2}));
  EXPECT_TRUE(semidegree_core(kTriangle, 2).empty());
  EXPECT_EQ(semidegree_core(kTriangle, 0), (VertexSet{0, 1, 2}));
  const DiGraph tail = build_digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  EXPECT_EQ(semidegree_core(tail, 1), (VertexSet{0, 1, 2}));
}

TEST(SemidegreeCore, IndependentOfDeletionOrder) {
  Rng rng(17);
  for (const DiGraph& g : random_graphs(60, 30, 13)) {
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t k = 0; k <= 4; ++k) {
      const VertexSet reference = semidegree_core(g, k);
      for (int r = 0; r < 10; ++r) {
        rng.shuffle(std::span<Vertex>(order));
        EXPECT_EQ(semidegree_core(g, k, order), reference);
      }
    }
  }
}

TEST(SemidegreeCore, RejectsNonPermutation) {
  EXPECT_THROW(semidegree_core(kTriangle, 1, std::vector<Vertex>{0, 0, 1}), Error);
  EXPECT_THROW(semidegree_core(kTriangle, 1, std::vector<Vertex>{0, 1}), Error);
}

TEST(PeelDiagnostics, TriangleWithGivenOrder) {
  PeelTrace t;
  t.n = 3;
  // Removal order 2, 1, 0 is paper order 0 < 1 < 2.
  t.steps = {{2, 1, RemovalReason::InMin, {1, 1}}, {1, 0, RemovalReason::InMin, {1, 0}}, {0, 0, RemovalReason::InMin, {0, 0}}};
  const auto diag = peel_diagnostics(kTriangle, t);
  EXPECT_EQ(diag[2].out_left, 1U);
  EXPECT_EQ(diag[2].out_right, 0U);
  EXPECT_EQ(diag[0], (SplitDegrees{0, 1, 0, 1}));
}

TEST(PeelDiagnostics, TransitiveSinkHasNoLeftInNeighbours) {
  const DiGraph g = gen_transitive_tournament(3);
  const auto diag = peel_diagnostics(g, peel_semidegree(g));
  EXPECT_EQ(diag[0].in_left, 0U);
  EXPECT_EQ(diag[0].in_right, 2U);
}

TEST(PeelDiagnostics, SplitsReproduceDegrees) {
  for (const DiGraph& g : random_graphs(80, 20, 4)) {
    const PeelTrace t = peel_semidegree(g);
    const auto diag = peel_diagnostics(g, t);
    const std::vector<Vertex> order = t.paper_order();
    for (Vertex v = 0; v < g.n(); ++v) {
      EXPECT_EQ(diag[v].out_left + diag[v].out_right, g.out_degree(v));
      EXPECT_EQ(diag[v].in_left + diag[v].in_right, g.in_degree(v));
    }
    // Removed for small outdegree ⇒ at most c out-neighbours to the left.
    for (const PeelStep& s : t.steps) {
      const SplitDegrees& split = diag[s.vertex];
      EXPECT_LE(s.reason == RemovalReason::OutMin ? split.out_left : split.in_left, t.c);
    }
  }
}

TEST(PeelDiagnostics, TraceMismatch) {
  PeelTrace t = peel_semidegree(kTriangle);
  t.steps[1].vertex = t.steps[0].vertex;
  EXPECT_THROW(peel_diagnostics(kTriangle, t), Error);
  EXPECT_THROW(peel_diagnostics(gen_transitive_tournament(4), peel_semidegree(kTriangle)), Error);
}

TEST(TheoremBound, Examples) {
  EXPECT_EQ(theorem_bound(3, 1), BoundValue(1, 3));
  EXPECT_EQ(theorem_bound(17, 0), BoundValue(0));
  EXPECT_EQ(theorem_bound(200, 20), BoundValue(21, 20));
  EXPECT_FALSE(bound_holds(200, 20, 1));
  EXPECT_TRUE(bound_holds(200, 20, 2));
  EXPECT_THROW(theorem_bound(5, 5), Error);
  EXPECT_EQ(theorem_bound(kTriangle), BoundValue(1, 3));
}

TEST(TheoremBound, HoldsOnRandomOutRegularGraphs) {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng.below(120);
    const std::size_t d = rng.below(n);
    const DiGraph g = gen_random_min_outdegree(n, d, rng.next());
    const std::size_t c = peel_semidegree(g).c;
    EXPECT_TRUE(bound_holds(n, d, c)) << "n=" << n << " d=" << d << " c=" << c;
    EXPECT_GE(BoundValue(static_cast<std::int64_t>(c)), theorem_bound(n, d));
  }
}

TEST(TraceCsv, HeaderAndRows) {
  const std::string csv = trace_csv(peel_semidegree(gen_transitive_tournament(2)));
  EXPECT_EQ(csv, "step_index,paper_index,vertex,step_value,reason\n0,2,1,0,InMin\n1,1,0,0,InMin\n");
}
