#ifndef PANTS_BOUNDS_HPP
#define PANTS_BOUNDS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pants/shift.hpp"
#include "pants/trivalent_graph.hpp"

namespace pants {

/// What loop surgery cut away: the loop, its vertex, the edge ("Y") to the
/// attachment vertex, and the attachment vertex itself. The attachment
/// vertex's two remaining edges are replaced by one fresh joined edge.
struct SurgeryRecord {
  EdgeId loop_edge = 0;
  Vertex loop_vertex = -1;
  EdgeId y_edge = 0;
  Vertex attach_vertex = -1;
  std::array<EdgeId, 2> split_edges{};
  EdgeId joined_edge = 0;
  /// Big-graph vertex -> small-graph vertex, -1 for the two removed vertices.
  std::vector<Vertex> vertex_map;
};

struct SurgeryResult {
  TrivalentGraph graph;
  SurgeryRecord record;
};

struct StageLength {
  std::string stage;
  int length = 0;
};

/// An explicit shift path together with the bound it is claimed to respect.
struct BoundCertificate {
  ShiftPath path;
  double claimed_bound = 0.0;
  std::vector<StageLength> stage_lengths;
  TrivalentGraph end;
};

/// 2g - 3 + 2 log2((g-1)!).
double pull_loops_bound(int genus);
/// max(0, g - 5).
double flatten_bound(int genus);
/// pull_loops_bound + flatten_bound, half the diameter bound.
double oloops_path_bound(int genus);
/// 4 log2((g-1)!) + 4g - 6 for g <= 5, 4 log2((g-1)!) + 6g - 16 for g >= 6.
double diameter_bound(int genus);
double log2_factorial(int n);

struct MakeLoopResult {
  TrivalentGraph graph;
  ShiftPath path;
};

/// Shortens a girth cycle to a loop: girth - 1 shifts, none if a loop exists.
MakeLoopResult make_loop(const TrivalentGraph& g);

/// Surgery on the loop whose vertex comes first in the canonical labeling.
/// GenusTooSmall for genus 2, NoLoop without a loop.
SurgeryResult loop_surgery(const TrivalentGraph& g);
SurgeryResult loop_surgery_at(const TrivalentGraph& g, EdgeId loop_edge);

/// Path to a graph with `genus` loops built by recursive loop pulling:
/// make a loop, cut it off, solve the smaller graph, and lift that path back
/// with the cut-off piece carried along.
BoundCertificate pull_all_loops(const TrivalentGraph& g, int genus);

/// Path from a graph with `genus` loops to one isomorphic to
/// make_oloops(genus), one interchange per core vertex off the longest core
/// path. BoundViolation if more than max(0, g-5) shifts would be needed.
BoundCertificate flatten_to_oloops(const TrivalentGraph& g, int genus);

/// pull_all_loops followed by flatten_to_oloops.
BoundCertificate path_to_oloops(const TrivalentGraph& g, int genus);

/// Path from `start` (isomorphic to path_end(p)) back to a graph isomorphic
/// to p.start, replaying the inverse moves of p through the isomorphism.
ShiftPath reverse_path_from(const ShiftPath& p, const TrivalentGraph& start);

/// Constructive a -> b path routed through the O_loops orbit; its length is
/// at most diameter_bound(genus).
BoundCertificate path_between(const TrivalentGraph& a, const TrivalentGraph& b);

/// Replays the path and checks length <= bound and that stage lengths sum to
/// the path length. Returns an empty string when valid, otherwise the reason.
std::string certificate_problem(const BoundCertificate& cert);

nlohmann::ordered_json certificate_to_json(const BoundCertificate& cert);

}  // namespace pants

#endif  // PANTS_BOUNDS_HPP
