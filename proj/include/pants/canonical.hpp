#ifndef PANTS_CANONICAL_HPP
#define PANTS_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pants/trivalent_graph.hpp"

namespace pants {

/// Label-independent key of a multigraph: equal keys iff isomorphic.
///
/// Layout: byte 0 is the vertex count, followed by the upper triangle
/// (diagonal included) of the edge-multiplicity matrix, row-major, in the
/// canonical vertex order. Diagonal entries count loops.
struct CanonicalForm {
  std::vector<std::uint8_t> key;

  auto operator<=>(const CanonicalForm&) const = default;

  std::string hex() const;
  static CanonicalForm from_hex(std::string_view hex);
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the vertex placed at canonical position i.
  std::vector<Vertex> order;
};

/// Partition refinement on (loop count, multiset of neighbour classes), then
/// individualisation-refinement search for the lexicographically smallest
/// multiplicity code.
CanonicalLabeling canonical_labeling(const TrivalentGraph& g);
CanonicalForm canonical_form(const TrivalentGraph& g);
bool is_isomorphic(const TrivalentGraph& a, const TrivalentGraph& b);

/// The graph relabelled into canonical vertex order with edges sorted; equal
/// (as an edge list) for all members of an isomorphism class.
TrivalentGraph canonical_representative(const TrivalentGraph& g);

/// Half-edge bijection a -> b realising an isomorphism, if one exists.
std::optional<std::vector<HalfEdge>> find_isomorphism(const TrivalentGraph& a,
                                                      const TrivalentGraph& b);

}  // namespace pants

#endif  // PANTS_CANONICAL_HPP
