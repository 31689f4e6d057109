#include <gtest/gtest.h>

#include <random>

#include "pants/error.hpp"
#include "pants/trivalent_graph.hpp"
#include "test_support.hpp"

namespace pants {
namespace {

TrivalentGraph theta() { return TrivalentGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}}); }
TrivalentGraph dumbbell() { return TrivalentGraph::from_edge_list(2, {{0, 0}, {0, 1}, {1, 1}}); }
TrivalentGraph k4() {
  return TrivalentGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
TrivalentGraph k33() {
  return TrivalentGraph::from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}
TrivalentGraph petersen() {
  return TrivalentGraph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                             {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadParameters;
}

TEST(TrivalentGraph, BasicCounts) {
  const auto g = theta();
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.genus(), 2);
  EXPECT_EQ(g.multiplicity(0, 1), 3);
  EXPECT_EQ(loop_count(dumbbell()), 2);
  EXPECT_EQ(loop_count(theta()), 0);
  EXPECT_EQ(dumbbell().multiplicity(0, 0), 1);
}

TEST(TrivalentGraph, RejectsBadInput) {
  EXPECT_EQ(code_of([] { TrivalentGraph::from_edge_list(2, {{0, 1}, {0, 1}}); }), ErrorCode::NotTrivalent);
  EXPECT_EQ(code_of([] { TrivalentGraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}}); }), ErrorCode::BadGenus);
  EXPECT_EQ(code_of([] { TrivalentGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 5}}); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([] { TrivalentGraph::from_edge_list(4, {{0, 0}, {0, 1}, {1, 1}, {2, 2}, {2, 3}, {3, 3}}); }),
            ErrorCode::Disconnected);
}

TEST(TrivalentGraph, GirthOfNamedGraphs) {
  EXPECT_EQ(girth(dumbbell()).length, 1);
  EXPECT_EQ(girth(theta()).length, 2);
  EXPECT_EQ(girth(k4()).length, 3);
  EXPECT_EQ(girth(k33()).length, 4);
  EXPECT_EQ(girth(petersen()).length, 5);
}

TEST(TrivalentGraph, GirthWitnessIsSmallestSortedCycle) {
  const auto r = girth(k4());
  ASSERT_EQ(r.witness.length(), 3u);
  EXPECT_TRUE(is_simple_cycle(k4(), r.witness));
  // Triangle 0-1-2 uses edge IDs {0, 1, 3}, the smallest sorted triple.
  auto ids = r.witness.edges;
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(ids, (std::vector<EdgeId>{0, 1, 3}));
  EXPECT_EQ(r.witness.edges.front(), 0u);
}

TEST(TrivalentGraph, K4HasSevenCycles) {
  const auto lengths = testing::all_cycle_lengths(k4());
  EXPECT_EQ(lengths.size(), 7u);
  EXPECT_EQ(std::count(lengths.begin(), lengths.end(), 3), 4);
  EXPECT_EQ(std::count(lengths.begin(), lengths.end(), 4), 3);
}

TEST(TrivalentGraph, GirthMatchesCycleEnumeration) {
  std::mt19937_64 rng(7);
  for (int n : {2, 4, 6, 8, 10, 12}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = testing::random_graph(n, rng);
      const auto r = girth(g);
      EXPECT_EQ(r.length, testing::brute_force_girth(g)) << serialize(g);
      EXPECT_TRUE(is_simple_cycle(g, r.witness));
      EXPECT_EQ(static_cast<int>(r.witness.length()), r.length);
    }
  }
}

TEST(TrivalentGraph, CycleVerticesValidates) {
  const auto g = k4();
  EXPECT_EQ(cycle_vertices(g, Cycle{{0, 3, 1}}).size(), 3u);
  EXPECT_FALSE(is_simple_cycle(g, Cycle{{0, 5}}));
  EXPECT_EQ(code_of([&] { cycle_vertices(g, Cycle{{0, 5}}); }), ErrorCode::BadParameters);
}

TEST(TrivalentGraph, OLoopsShape) {
  for (int genus = 2; genus <= 9; ++genus) {
    const auto g = make_oloops(genus);
    EXPECT_EQ(g.genus(), genus);
    EXPECT_EQ(loop_count(g), genus);
  }
  EXPECT_EQ(code_of([] { make_oloops(1); }), ErrorCode::BadGenus);
}

TEST(TrivalentGraph, JsonRoundTripKeepsStructure) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(8, rng);
    const auto back = parse_graph(serialize(g));
    EXPECT_TRUE(back.same_structure(g));
  }
  EXPECT_EQ(serialize(theta()), R"({"vertices":2,"edges":[[0,1],[0,1],[0,1]]})");
}

TEST(TrivalentGraph, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_graph("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":2})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":2,"edges":[[0,1,2]]})"); }), ErrorCode::ParseError);
}

TEST(TrivalentGraph, RelabelPreservesMultiplicities) {
  std::mt19937_64 rng(3);
  const auto g = testing::random_graph(10, rng);
  const auto perm = testing::random_permutation(10, rng);
  const auto h = relabel_vertices(g, perm);
  for (int u = 0; u < 10; ++u) {
    for (int v = 0; v < 10; ++v) {
      EXPECT_EQ(g.multiplicity(u, v), h.multiplicity(perm[static_cast<std::size_t>(u)],
                                                     perm[static_cast<std::size_t>(v)]));
    }
  }
}

}  // namespace
}  // namespace pants
