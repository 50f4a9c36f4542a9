#include <gtest/gtest.h>

#include "semicore/extremal.hpp"
#include "semicore/oracle.hpp"
#include "semicore/peel.hpp"

using namespace semicore;

namespace {

std::size_t in_from(const ExtremalTournament& t, Vertex v, const PartRange& from) {
  std::size_t count = 0;
  for (Vertex u : t.graph.in(v)) count += from.contains(u);
  return count;
}

}  // namespace

TEST(TournamentParams, DerivedQuantities) {
  const TournamentParams p = TournamentParams::make(2, 3, 70);
  EXPECT_EQ(p.d(), 11U);
  EXPECT_EQ(p.n0(), 36U);
  EXPECT_EQ(p.size_b(), 22U);
  EXPECT_EQ(p.l() * p.size_b(), p.d() * (p.d() + 1) / 2);
  EXPECT_GE(p.size_b(), p.d());
  EXPECT_EQ(p.size_p(), 34U);
}

TEST(TournamentParams, Validation) {
  try {
    TournamentParams::make(2, 1, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewVertices);
  }
  EXPECT_THROW(TournamentParams::make(0, 1, 10), Error);
  EXPECT_THROW(TournamentParams::make(1, 0, 10), Error);
}

TEST(ExtremalTournament, SmallestIsDirectedTriangle) {
  const ExtremalTournament t = construct_extremal_tournament(1, 1, 3);
  // A = {0}, B = {1}, C = {2}: B->A, A->C, C->B.
  EXPECT_EQ(t.graph, build_digraph(3, {{1, 0}, {0, 2}, {2, 1}}));
  EXPECT_EQ(t.graph.min_outdegree(), 1U);
  EXPECT_EQ(brute_max_min_semidegree(t.graph).c, 1U);
  EXPECT_EQ(max_min_semidegree(t.graph).c, 1U);
}

TEST(ExtremalTournament, K2L1OnTenVertices) {
  const ExtremalTournament t = construct_extremal_tournament(2, 1, 10);
  EXPECT_TRUE(t.graph.is_tournament());
  EXPECT_EQ(t.graph.m(), 45U);
  EXPECT_EQ(t.graph.min_outdegree(), 3U);
  for (Vertex v = t.b.begin; v < t.b.end; ++v) EXPECT_EQ(in_from(t, v, t.c), 1U);
  const std::size_t brute = brute_max_min_semidegree(t.graph).c;
  EXPECT_LE(brute, 1U);
  EXPECT_EQ(max_min_semidegree(t.graph).c, brute);
}

TEST(ExtremalTournament, PaddingKeepsDegreeAndBound) {
  const ExtremalTournament t = construct_extremal_tournament(1, 1, 5);
  EXPECT_EQ(t.p.size(), 2U);
  EXPECT_EQ(t.graph.min_outdegree(), 1U);
  EXPECT_EQ(max_min_semidegree(t.graph).c, 1U);
  EXPECT_EQ(brute_max_min_semidegree(t.graph).c, 1U);
  // Each padding vertex beats everything before it.
  for (Vertex p = t.p.begin; p < t.p.end; ++p) EXPECT_EQ(t.graph.in_degree(p), t.graph.n() - 1 - p);
}

TEST(ExtremalTournament, StructureAcrossParameters) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t l = 1; l <= 3; ++l) {
      const std::size_t n0 = (k + 1) * (2 * k * l - 1) + l;
      for (std::size_t n : {n0, n0 + 1, n0 + 5}) {
        const ExtremalTournament t = construct_extremal_tournament(k, l, n);
        const std::size_t d = t.params.d();
        SCOPED_TRACE(testing::Message() << "k=" << k << " l=" << l << " n=" << n);
        EXPECT_TRUE(t.graph.is_tournament());
        EXPECT_EQ(t.graph.min_outdegree(), d);
        EXPECT_EQ(t.graph.out_degree(t.a.begin), d);  // sink of A
        EXPECT_EQ(t.graph.out_degree(t.b.begin), d);  // sink of B
        for (Vertex v = t.b.begin; v < t.b.end; ++v) EXPECT_EQ(in_from(t, v, t.c), l);
        for (std::size_t rank = 1; rank <= d; ++rank) {
          const Vertex cv = t.c.end - rank;
          EXPECT_EQ(t.graph.out_degree(cv), d);
          EXPECT_EQ(t.graph.in_degree(cv) + d, n - 1);
        }
        EXPECT_LE(max_min_semidegree(t.graph).c, l);
        EXPECT_EQ(t.part_of(t.a.begin), Part::A);
        EXPECT_EQ(t.part_of(t.c.begin), Part::C);
      }
    }
}

TEST(ExtremalTournament, GraphWithoutBPeelsToZero) {
  const ExtremalTournament t = construct_extremal_tournament(2, 2, 40);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < t.graph.n(); ++v)
    if (t.part_of(v) != Part::B) keep.push_back(v);
  EXPECT_EQ(max_min_semidegree(induced_subgraph(t.graph, keep).graph).c, 0U);
}

TEST(ExtremalTournament, SeededBOrderKeepsGuarantees) {
  const ExtremalTournament base = construct_extremal_tournament(2, 2, 31);
  const ExtremalTournament shuffled = construct_extremal_tournament(2, 2, 31, 123);
  EXPECT_NE(base.graph, shuffled.graph);
  EXPECT_EQ(shuffled.graph, construct_extremal_tournament(2, 2, 31, 123).graph);
  EXPECT_TRUE(shuffled.graph.is_tournament());
  EXPECT_EQ(shuffled.graph.min_outdegree(), 7U);
  for (Vertex v = shuffled.b.begin; v < shuffled.b.end; ++v) EXPECT_EQ(in_from(shuffled, v, shuffled.c), 2U);
}

TEST(ExtremalTournament, PartsBlock) {
  EXPECT_EQ(construct_extremal_tournament(2, 1, 12).parts_block(),
            "# params k=2 l=1 n=12 d=3 n0=10\n# part A 0 1\n# part B 1 7\n# part C 7 10\n# part P 10 12\n");
}

TEST(PropUpperBound, Examples) {
  const PropBound a = prop_upper_bound(TournamentParams::make(1, 1, 3));
  EXPECT_EQ(a.l, 1U);
  EXPECT_EQ(a.cap, BoundValue(1));
  EXPECT_TRUE(a.l_within_cap);
  const PropBound b = prop_upper_bound(TournamentParams::make(2, 1, 10));
  EXPECT_EQ(b.cap, BoundValue(21, 20));
  EXPECT_TRUE(b.l_within_cap);
}

TEST(PropUpperBound, CapShrinksWithPadding) {
  // At n well above n0 the cap drops below l; reported, not enforced.
  const PropBound far = prop_upper_bound(TournamentParams::make(1, 1, 30));
  EXPECT_FALSE(far.l_within_cap);
  EXPECT_EQ(far.cap, BoundValue(1, 10));
}

TEST(PropUpperBound, LEqualsHalfOfDPlusOneOverK) {
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t l = 1; l <= 6; ++l) {
      const TournamentParams p = TournamentParams::make(k, l, (k + 1) * (2 * k * l - 1) + l);
      EXPECT_EQ(2 * k * l, p.d() + 1);
      EXPECT_TRUE(prop_upper_bound(p).l_within_cap);
    }
}
