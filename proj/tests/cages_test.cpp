#include <gtest/gtest.h>

#include <cmath>

#include "pants/atlas.hpp"
#include "pants/cages.hpp"
#include "pants/error.hpp"
#include "test_support.hpp"

namespace pants {
namespace {

TEST(Cages, LowerBoundFormula) {
  EXPECT_EQ(cage_lower_bound(3, 3).lower_bound, 4u);
  EXPECT_EQ(cage_lower_bound(3, 4).lower_bound, 6u);
  EXPECT_EQ(cage_lower_bound(3, 5).lower_bound, 10u);
  EXPECT_EQ(cage_lower_bound(3, 6).lower_bound, 14u);
  EXPECT_EQ(cage_lower_bound(4, 5).lower_bound, 17u);
  EXPECT_EQ(cage_lower_bound(3, 5).parity, Parity::Odd);
  EXPECT_THROW(cage_lower_bound(2, 5), Error);
  EXPECT_THROW(cage_lower_bound(3, 2), Error);
}

TEST(Cages, ExhaustiveMinimumOrders) {
  EXPECT_EQ(min_cubic_order_with_girth(3), 4);
  EXPECT_EQ(min_cubic_order_with_girth(4), 6);
  EXPECT_EQ(min_cubic_order_with_girth(5), 10);
  EXPECT_THROW(min_cubic_order_with_girth(6), Error);
}

TEST(Cages, GirthBoundHoldsAndMatchesOracle) {
  for (int g = 2; g <= 5; ++g) {
    const auto atlas = enumerate_orbits(g);
    const auto report = verify_girth_bound(atlas);
    EXPECT_TRUE(report.ok());
    EXPECT_DOUBLE_EQ(report.bound, 2.0 * (1.0 + std::log2(g - 1.0)));
    int max_girth = 0;
    for (const auto& o : atlas.orbits) max_girth = std::max(max_girth, testing::brute_force_girth(o.representative));
    EXPECT_EQ(report.max_girth, max_girth);
  }
}

}  // namespace
}  // namespace pants
