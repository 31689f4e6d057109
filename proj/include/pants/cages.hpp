#ifndef PANTS_CAGES_HPP
#define PANTS_CAGES_HPP

#include <cstdint>
#include <vector>

#include "pants/atlas.hpp"

namespace pants {

enum class Parity { Even, Odd };

/// Moore-type lower bound on the order of a (k, G)-cage.
struct CageBoundReport {
  int girth = 0;
  std::uint64_t lower_bound = 0;
  Parity parity = Parity::Even;
};

/// (2(k-1)^{G/2} - 2)/(k-2) for even G, (k(k-1)^{(G-1)/2} - 2)/(k-2) for odd G.
/// Requires k >= 3 and G >= 3.
CageBoundReport cage_lower_bound(int k, int girth);

/// Smallest order of a simple cubic graph with girth >= G, by exhaustive
/// search. Desk scale only: 3 <= G <= 5.
int min_cubic_order_with_girth(int girth, std::uint64_t node_budget = 50'000'000ULL);

/// 2(1 + log2(g - 1)).
double girth_upper_bound(int genus);

struct GirthBoundReport {
  int genus = 0;
  double bound = 0.0;
  int max_girth = 0;
  /// Orbit indices whose representative breaks girth <= bound.
  std::vector<int> violations;
  /// Orbit indices with girth >= 3 where LB(3, girth) > 2g - 2.
  std::vector<int> cage_violations;

  bool ok() const noexcept { return violations.empty() && cage_violations.empty(); }
};

GirthBoundReport verify_girth_bound(const OrbitAtlas& atlas);

}  // namespace pants

#endif  // PANTS_CAGES_HPP
