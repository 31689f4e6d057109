#include <gtest/gtest.h>

#include <random>

#include "pants/canonical.hpp"
#include "pants/error.hpp"
#include "pants/shift.hpp"
#include "test_support.hpp"

namespace pants {
namespace {

const TrivalentGraph kTheta = TrivalentGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}});
const TrivalentGraph kDumbbell = TrivalentGraph::from_edge_list(2, {{0, 0}, {0, 1}, {1, 1}});

TEST(Shift, ThetaReachesDumbbell) {
  const auto moves = enumerate_shifts(kTheta);
  ASSERT_EQ(moves.size(), 6u);
  // Per edge one pairing splits off two loops; the other rebuilds the theta.
  int dumbbells = 0;
  for (const auto& m : moves) {
    const auto after = apply_shift(kTheta, m);
    if (is_isomorphic(after, kDumbbell)) {
      ++dumbbells;
    } else {
      EXPECT_TRUE(is_isomorphic(after, kTheta));
    }
  }
  EXPECT_EQ(dumbbells, 3);
}

TEST(Shift, DumbbellNeighbours) {
  EXPECT_EQ(enumerate_shifts(kDumbbell).size(), 2u);
  const auto nb = neighbors(kDumbbell);
  ASSERT_EQ(nb.size(), 1u);
  EXPECT_EQ(*nb.begin(), canonical_form(kTheta));
}

TEST(Shift, IllegalMoves) {
  EXPECT_THROW(apply_shift(kDumbbell, {0, 0}), Error);
  EXPECT_THROW(apply_shift(kTheta, {99, 0}), Error);
  EXPECT_THROW(apply_shift(kTheta, {0, 2}), Error);
}

TEST(Shift, FreshIdForCollapsedEdge) {
  const auto after = apply_shift(kTheta, {1, 0});
  EXPECT_EQ(after.id_at(1), 3u);
  EXPECT_EQ(after.id_at(0), 0u);
  EXPECT_EQ(after.next_edge_id(), 4u);
}

TEST(Shift, PairingsGroupTheDocumentedHalfEdges) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_graph(8, rng);
    for (const auto& m : enumerate_shifts(g)) {
      const int slot = *g.find_slot(m.edge);
      const auto [a, b, c, d] = shift_half_edges(g, slot);
      const auto after = apply_shift(g, m);
      const HalfEdge with_a = m.pairing == 0 ? c : d;
      const HalfEdge with_b = m.pairing == 0 ? d : c;
      EXPECT_EQ(after.owner(a), after.owner(with_a));
      EXPECT_EQ(after.owner(b), after.owner(with_b));
      EXPECT_EQ(after.owner(a), after.owner(2 * slot));
      EXPECT_EQ(pairing_grouping(g, slot, a, with_a), m.pairing);
    }
  }
}

TEST(Shift, InverseRestoresGrouping) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_graph(2 + 2 * (trial % 5), rng);
    const auto moves = enumerate_shifts(g);
    if (moves.empty()) continue;
    const auto m = moves[rng() % moves.size()];
    const auto after = apply_shift(g, m);
    const auto back = apply_shift(after, inverse_shift(g, m));
    const auto [a, b, c, d] = shift_half_edges(g, *g.find_slot(m.edge));
    EXPECT_EQ(back.owner(a), back.owner(b));
    EXPECT_EQ(back.owner(c), back.owner(d));
    EXPECT_TRUE(is_isomorphic(back, g));
  }
}

TEST(Shift, ShortenCycleDropsOneEdge) {
  const auto k4 = TrivalentGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto c = girth(k4).witness;
  const auto r = shorten_cycle(k4, c);
  EXPECT_EQ(r.cycle.length(), 2u);
  EXPECT_TRUE(is_simple_cycle(r.graph, r.cycle));
  const auto r2 = shorten_cycle(r.graph, r.cycle);
  EXPECT_EQ(r2.cycle.length(), 1u);
  EXPECT_TRUE(r2.graph.is_loop_slot(*r2.graph.find_slot(r2.cycle.edges[0])));
  EXPECT_THROW(shorten_cycle(r2.graph, r2.cycle), Error);
}

TEST(Shift, PathJsonRoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::random_graph(10, rng);
    ShiftPath p{g, {}};
    for (int i = 0; i < 8; ++i) {
      const auto moves = enumerate_shifts(g);
      p.moves.push_back(moves[rng() % moves.size()]);
      g = apply_shift(g, p.moves.back());
    }
    const auto back = path_from_json(nlohmann::ordered_json::parse(path_to_json(p).dump()));
    EXPECT_TRUE(path_end(back).same_structure(path_end(p)));
    EXPECT_EQ(path_to_json(back).dump(), path_to_json(p).dump());
  }
}

TEST(Shift, PathJsonAcceptsReversedEdge) {
  // [1,0] names the same slot from the other end: pairing 0 then groups the
  // first half at vertex 1 with the first half at vertex 0.
  const auto j = nlohmann::ordered_json::parse(
      R"({"start":{"vertices":2,"edges":[[0,1],[0,1],[0,1]]},"moves":[{"edge":[1,0],"pairing":0}]})");
  const auto p = path_from_json(j);
  EXPECT_TRUE(is_isomorphic(path_end(p), kDumbbell));
  EXPECT_THROW(path_from_json(nlohmann::ordered_json::parse(R"({"moves":[]})")), Error);
}

}  // namespace
}  // namespace pants
