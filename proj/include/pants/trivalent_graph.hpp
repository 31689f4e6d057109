#ifndef PANTS_TRIVALENT_GRAPH_HPP
#define PANTS_TRIVALENT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pants {

using Vertex = int;
using HalfEdge = int;
using EdgeId = std::uint32_t;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Closed walk without repeated edges, listed by edge ID in walk order.
/// A loop is a cycle of length 1, a pair of parallel edges one of length 2.
struct Cycle {
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  bool operator==(const Cycle&) const = default;
};

/// Connected 3-regular multigraph stored as half-edges.
///
/// Edge slot k owns half-edges 2k and 2k+1, so the partner map h -> h^1 is a
/// fixed-point-free involution by construction. Each slot carries a stable
/// EdgeId; rewriting operations keep slots and IDs of the edges they do not
/// destroy, and mint fresh IDs from next_edge_id() for the ones they create.
/// Instances are immutable once built and every constructor validates.
class TrivalentGraph {
 public:
  /// Builds a graph from unordered vertex pairs; loops are written (v, v).
  /// Edge IDs are assigned 0, 1, 2, ... in list order.
  static TrivalentGraph from_edge_list(int vertex_count, const EdgeList& edges);

  /// Low-level constructor used by the rewriting code: owners[h] is the vertex
  /// of half-edge h, ids[k] the ID of slot k.
  TrivalentGraph(int vertex_count, std::vector<Vertex> owners,
                 std::vector<EdgeId> ids, EdgeId next_id);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(ids_.size()); }
  int half_edge_count() const noexcept { return static_cast<int>(owners_.size()); }
  /// Genus of the closed surface whose pants graph this is: n = 2g - 2.
  int genus() const noexcept { return vertex_count_ / 2 + 1; }

  Vertex owner(HalfEdge h) const { return owners_[static_cast<std::size_t>(h)]; }
  static constexpr HalfEdge partner(HalfEdge h) noexcept { return h ^ 1; }
  static constexpr int slot_of(HalfEdge h) noexcept { return h >> 1; }

  EdgeId id_at(int slot) const { return ids_[static_cast<std::size_t>(slot)]; }
  std::optional<int> find_slot(EdgeId id) const noexcept;
  EdgeId next_edge_id() const noexcept { return next_id_; }

  /// The three half-edges at v in increasing index order.
  const std::array<HalfEdge, 3>& incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  /// Endpoints (owner of 2k, owner of 2k+1).
  std::pair<Vertex, Vertex> endpoints(int slot) const {
    return {owner(2 * slot), owner(2 * slot + 1)};
  }
  bool is_loop_slot(int slot) const { return owner(2 * slot) == owner(2 * slot + 1); }
  /// Number of edges joining u and v (loops at u when u == v).
  int multiplicity(Vertex u, Vertex v) const;

  std::span<const Vertex> owners() const noexcept { return owners_; }
  std::span<const EdgeId> edge_ids() const noexcept { return ids_; }
  /// Edge list in slot order with half-edge orientation preserved.
  EdgeList edge_list() const;

  /// Same half-edge structure; edge IDs are ignored.
  bool same_structure(const TrivalentGraph& other) const noexcept;
  bool operator==(const TrivalentGraph& other) const noexcept;

 private:
  void validate_and_index();

  int vertex_count_ = 0;
  std::vector<Vertex> owners_;
  std::vector<EdgeId> ids_;
  EdgeId next_id_ = 0;
  std::vector<std::array<HalfEdge, 3>> incident_;
};

int loop_count(const TrivalentGraph& g);

struct GirthResult {
  int length = 0;
  Cycle witness;
};

/// Shortest cycle, multigraph sense. Among several shortest cycles the one
/// with the lexicographically smallest sorted ID list is returned, walked
/// from its lowest ID toward the smaller neighbouring ID.
GirthResult girth(const TrivalentGraph& g);

/// Vertex sequence u_0..u_{L-1} of a cycle, with edge i joining u_i and
/// u_{i+1}. Throws BadParameters if c is not a simple cycle in g.
std::vector<Vertex> cycle_vertices(const TrivalentGraph& g, const Cycle& c);
bool is_simple_cycle(const TrivalentGraph& g, const Cycle& c);

/// The standard g-loop graph: a path of g-2 core vertices, two pendant loop
/// vertices at each end of the path and one at every interior vertex. Genus 2
/// gives the dumbbell.
TrivalentGraph make_oloops(int genus);

/// Copy with vertex v renamed perm[v]; slots, orientation and IDs unchanged.
TrivalentGraph relabel_vertices(const TrivalentGraph& g, std::span<const Vertex> perm);

nlohmann::ordered_json graph_to_json(const TrivalentGraph& g);
TrivalentGraph graph_from_json(const nlohmann::ordered_json& j);

/// {"vertices":n,"edges":[[u,v],...]}, edges in slot order.
std::string serialize(const TrivalentGraph& g);
TrivalentGraph parse_graph(std::string_view text);

}  // namespace pants

#endif  // PANTS_TRIVALENT_GRAPH_HPP
