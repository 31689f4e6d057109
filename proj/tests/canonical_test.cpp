#include <gtest/gtest.h>

#include <random>

#include "pants/atlas.hpp"
#include "pants/canonical.hpp"
#include "pants/error.hpp"
#include "test_support.hpp"

namespace pants {
namespace {

TEST(Canonical, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(21);
  for (int n : {2, 4, 6}) {
    std::vector<TrivalentGraph> graphs;
    for (int i = 0; i < 40; ++i) graphs.push_back(testing::random_graph(n, rng));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i; j < graphs.size(); ++j) {
        EXPECT_EQ(is_isomorphic(graphs[i], graphs[j]), testing::brute_force_isomorphic(graphs[i], graphs[j]));
      }
    }
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 * (1 + trial % 7);
    const auto g = testing::random_graph(n, rng);
    const auto h = relabel_vertices(g, testing::random_permutation(n, rng));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(canonical_representative(g).same_structure(canonical_representative(h)));
  }
}

TEST(Canonical, FindIsomorphismIsAHalfEdgeMap) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(10, rng);
    const auto h = relabel_vertices(g, testing::random_permutation(10, rng));
    const auto iso = find_isomorphism(g, h);
    ASSERT_TRUE(iso.has_value());
    std::vector<int> vmap(10, -1);
    for (int x = 0; x < g.half_edge_count(); ++x) {
      const HalfEdge y = (*iso)[static_cast<std::size_t>(x)];
      EXPECT_EQ((*iso)[static_cast<std::size_t>(TrivalentGraph::partner(x))], TrivalentGraph::partner(y));
      int& image = vmap[static_cast<std::size_t>(g.owner(x))];
      if (image < 0) image = h.owner(y);
      EXPECT_EQ(image, h.owner(y));
    }
  }
  const auto theta = TrivalentGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}});
  const auto dumbbell = TrivalentGraph::from_edge_list(2, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_FALSE(find_isomorphism(theta, dumbbell).has_value());
}

TEST(Canonical, HexRoundTrip) {
  const auto f = canonical_form(make_oloops(5));
  EXPECT_EQ(CanonicalForm::from_hex(f.hex()), f);
  EXPECT_THROW(CanonicalForm::from_hex("abc"), Error);
  EXPECT_THROW(CanonicalForm::from_hex("zz"), Error);
}

TEST(Canonical, KnownKeys) {
  const auto theta = TrivalentGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(canonical_form(theta).hex(), "02000300");
}

}  // namespace
}  // namespace pants
