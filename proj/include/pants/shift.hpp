#ifndef PANTS_SHIFT_HPP
#define PANTS_SHIFT_HPP

#include <set>
#include <vector>

#include "json.hpp"
#include "pants/canonical.hpp"
#include "pants/trivalent_graph.hpp"

namespace pants {

/// One elementary shift: collapse the non-loop edge `edge` = {v1, v2} and
/// re-expand so each new vertex takes one half-edge from v1 and one from v2.
///
/// v1 owns the even half-edge of the slot. The other half-edges are ordered
/// by (far-end vertex, half-edge index): a < b at v1 and c < d at v2.
/// Pairing 0 groups {a, c} | {b, d}; pairing 1 groups {a, d} | {b, c}. The
/// block holding `a` goes to v1 together with the even half-edge.
struct ShiftMove {
  EdgeId edge = 0;
  int pairing = 0;

  bool operator==(const ShiftMove&) const = default;
};

struct ShiftPath {
  TrivalentGraph start;
  std::vector<ShiftMove> moves;

  std::size_t length() const noexcept { return moves.size(); }
};

/// Two moves per non-loop edge in slot order.
std::vector<ShiftMove> enumerate_shifts(const TrivalentGraph& g);

/// Vertex and edge counts are unchanged; the collapsed edge keeps its slot
/// but receives the fresh ID g.next_edge_id(). All other IDs survive.
TrivalentGraph apply_shift(const TrivalentGraph& g, const ShiftMove& m);

/// The move on apply_shift(g, m) that regroups the half-edges as in g. The
/// result is isomorphic to g; the two endpoint labels may be exchanged.
ShiftMove inverse_shift(const TrivalentGraph& g, const ShiftMove& m);

/// Pairing index of the shift on `slot` that places half-edges x and y on the
/// same new vertex. x and y must sit on different endpoints of the slot.
int pairing_grouping(const TrivalentGraph& g, int slot, HalfEdge x, HalfEdge y);

/// The half-edges (a, b, c, d) of the ordering used by ShiftMove.
std::array<HalfEdge, 4> shift_half_edges(const TrivalentGraph& g, int slot);

struct ShortenResult {
  TrivalentGraph graph;
  Cycle cycle;
  ShiftMove move;
};

/// One shift on the lowest-ID edge of c, grouping the two half-edges that
/// continue the cycle. The returned cycle is c without that edge.
ShortenResult shorten_cycle(const TrivalentGraph& g, const Cycle& c);

/// Canonical forms of all shift results except g's own form.
std::set<CanonicalForm> neighbors(const TrivalentGraph& g);

/// Replays a path, returning every intermediate graph (start first).
/// Throws IllegalMove if a move does not apply.
std::vector<TrivalentGraph> replay(const ShiftPath& path);
TrivalentGraph path_end(const ShiftPath& path);

/// Moves are written {"edge":[u,v],"occurrence":k,"pairing":p}, where [u,v]
/// are the endpoints in half-edge order and k counts earlier slots joining
/// the same two vertices.
nlohmann::ordered_json path_to_json(const ShiftPath& path);
ShiftPath path_from_json(const nlohmann::ordered_json& j);

}  // namespace pants

#endif  // PANTS_SHIFT_HPP
