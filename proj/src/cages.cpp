#include "pants/cages.hpp"

#include <cmath>
#include <limits>
#include <queue>

#include "pants/error.hpp"

namespace pants {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::BadParameters, "cage bound overflows 64 bits");
    }
    out *= base;
  }
  return out;
}

// Backtracking over simple cubic graphs on n vertices, rejecting any edge
// that would close a cycle shorter than `girth`.
class CageSearch {
 public:
  CageSearch(int n, int girth, std::uint64_t budget, std::uint64_t& nodes)
      : n_(n), girth_(girth), budget_(budget), nodes_(nodes),
        adj_(static_cast<std::size_t>(n)) {}

  bool run() { return fill(0); }

 private:
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(int u, int v) const {
    for (int w : adj_[static_cast<std::size_t>(u)]) {
      if (w == v) return true;
    }
    return false;
  }

  // Is v within `limit` steps of u?
  bool within(int u, int v, int limit) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      if (x == v) return true;
      if (dist[static_cast<std::size_t>(x)] == limit) continue;
      for (int y : adj_[static_cast<std::size_t>(x)]) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push(y);
        }
      }
    }
    return false;
  }

  bool fill(int v) {
    if (++nodes_ > budget_) throw Error(ErrorCode::SearchBudgetExceeded, "cage search exceeded its node budget");
    while (v < n_ && degree(v) == 3) ++v;
    if (v == n_) return true;
    bool tried_fresh = false;
    for (int w = v + 1; w < n_; ++w) {
      if (degree(w) == 3 || adjacent(v, w)) continue;
      if (degree(w) == 0) {
        // Untouched vertices are interchangeable.
        if (tried_fresh) continue;
        tried_fresh = true;
      }
      if (within(v, w, girth_ - 2)) continue;
      adj_[static_cast<std::size_t>(v)].push_back(w);
      adj_[static_cast<std::size_t>(w)].push_back(v);
      const bool found = fill(v);
      adj_[static_cast<std::size_t>(v)].pop_back();
      adj_[static_cast<std::size_t>(w)].pop_back();
      if (found) return true;
    }
    return false;
  }

  int n_;
  int girth_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

CageBoundReport cage_lower_bound(int k, int girth) {
  if (k < 3 || girth < 3) throw Error(ErrorCode::BadParameters, "cage bound needs k >= 3 and G >= 3");
  const auto km1 = static_cast<std::uint64_t>(k - 1);
  const auto km2 = static_cast<std::uint64_t>(k - 2);
  CageBoundReport r;
  r.girth = girth;
  if (girth % 2 == 0) {
    r.parity = Parity::Even;
    r.lower_bound = (2 * checked_pow(km1, girth / 2) - 2) / km2;
  } else {
    r.parity = Parity::Odd;
    r.lower_bound = (static_cast<std::uint64_t>(k) * checked_pow(km1, (girth - 1) / 2) - 2) / km2;
  }
  return r;
}

int min_cubic_order_with_girth(int girth, std::uint64_t node_budget) {
  if (girth < 3 || girth > 5) throw Error(ErrorCode::BadParameters, "exhaustive cage search supports 3 <= G <= 5");
  std::uint64_t nodes = 0;
  for (int n = 4;; n += 2) {
    CageSearch search(n, girth, node_budget, nodes);
    if (search.run()) return n;
  }
}

double girth_upper_bound(int genus) {
  if (genus < 2) throw Error(ErrorCode::BadGenus, "genus must be >= 2");
  return 2.0 * (1.0 + std::log2(static_cast<double>(genus - 1)));
}

GirthBoundReport verify_girth_bound(const OrbitAtlas& atlas) {
  GirthBoundReport r;
  r.genus = atlas.genus;
  r.bound = girth_upper_bound(atlas.genus);
  const auto vertices = static_cast<std::uint64_t>(2 * atlas.genus - 2);
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    const int G = girth(atlas.orbits[i].representative).length;
    r.max_girth = std::max(r.max_girth, G);
    if (static_cast<double>(G) > r.bound) r.violations.push_back(static_cast<int>(i));
    if (G >= 3 && cage_lower_bound(3, G).lower_bound > vertices) r.cage_violations.push_back(static_cast<int>(i));
  }
  return r;
}

}  // namespace pants
