#include "pants/trivalent_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "pants/error.hpp"

namespace pants {

namespace {

std::string vertex_str(Vertex v) { return std::to_string(v); }

}  // namespace

TrivalentGraph TrivalentGraph::from_edge_list(int vertex_count, const EdgeList& edges) {
  std::vector<Vertex> owners;
  owners.reserve(2 * edges.size());
  std::vector<EdgeId> ids;
  ids.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::BadParameters,
                  "edge (" + vertex_str(u) + "," + vertex_str(v) + ") out of range");
    }
    owners.push_back(u);
    owners.push_back(v);
    ids.push_back(static_cast<EdgeId>(ids.size()));
  }
  const auto next = static_cast<EdgeId>(ids.size());
  return TrivalentGraph(vertex_count, std::move(owners), std::move(ids), next);
}

TrivalentGraph::TrivalentGraph(int vertex_count, std::vector<Vertex> owners,
                               std::vector<EdgeId> ids, EdgeId next_id)
    : vertex_count_(vertex_count),
      owners_(std::move(owners)),
      ids_(std::move(ids)),
      next_id_(next_id) {
  validate_and_index();
}

void TrivalentGraph::validate_and_index() {
  if (vertex_count_ < 2 || vertex_count_ % 2 != 0) {
    throw Error(ErrorCode::BadGenus,
                "vertex count " + std::to_string(vertex_count_) + " is not even and >= 2");
  }
  if (owners_.size() != 2 * ids_.size()) {
    throw Error(ErrorCode::BadParameters, "half-edge and edge-ID arrays disagree");
  }
  std::vector<int> valence(static_cast<std::size_t>(vertex_count_), 0);
  incident_.assign(static_cast<std::size_t>(vertex_count_), {-1, -1, -1});
  for (std::size_t h = 0; h < owners_.size(); ++h) {
    const Vertex v = owners_[h];
    if (v < 0 || v >= vertex_count_) {
      throw Error(ErrorCode::BadParameters, "half-edge owner out of range");
    }
    int& deg = valence[static_cast<std::size_t>(v)];
    if (deg < 3) incident_[static_cast<std::size_t>(v)][static_cast<std::size_t>(deg)] = static_cast<HalfEdge>(h);
    ++deg;
  }
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (valence[static_cast<std::size_t>(v)] != 3) {
      throw Error(ErrorCode::NotTrivalent,
                  "vertex " + vertex_str(v) + " has valence " +
                      std::to_string(valence[static_cast<std::size_t>(v)]));
    }
  }
  {
    std::vector<EdgeId> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::BadParameters, "duplicate edge ID");
    }
    if (!sorted.empty() && sorted.back() >= next_id_) {
      throw Error(ErrorCode::BadParameters, "edge ID not below next_id");
    }
  }
  // Connectivity by BFS over half-edges.
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (HalfEdge h : incident_[static_cast<std::size_t>(v)]) {
      const Vertex w = owners_[static_cast<std::size_t>(partner(h))];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count_) {
    throw Error(ErrorCode::Disconnected, std::to_string(vertex_count_ - reached) +
                                             " vertices unreachable from vertex 0");
  }
}

std::optional<int> TrivalentGraph::find_slot(EdgeId id) const noexcept {
  for (std::size_t k = 0; k < ids_.size(); ++k) {
    if (ids_[k] == id) return static_cast<int>(k);
  }
  return std::nullopt;
}

int TrivalentGraph::multiplicity(Vertex u, Vertex v) const {
  int count = 0;
  for (HalfEdge h : incident(u)) {
    if (owner(partner(h)) == v) ++count;
  }
  // A loop at u is seen from both of its half-edges.
  return u == v ? count / 2 : count;
}

EdgeList TrivalentGraph::edge_list() const {
  EdgeList out;
  out.reserve(ids_.size());
  for (int k = 0; k < edge_count(); ++k) out.push_back(endpoints(k));
  return out;
}

bool TrivalentGraph::same_structure(const TrivalentGraph& other) const noexcept {
  return vertex_count_ == other.vertex_count_ && owners_ == other.owners_;
}

bool TrivalentGraph::operator==(const TrivalentGraph& other) const noexcept {
  return same_structure(other) && ids_ == other.ids_ && next_id_ == other.next_id_;
}

int loop_count(const TrivalentGraph& g) {
  int loops = 0;
  for (int k = 0; k < g.edge_count(); ++k) loops += g.is_loop_slot(k) ? 1 : 0;
  return loops;
}

namespace {

Cycle orient(std::vector<EdgeId> walk) {
  const auto lowest = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), lowest, walk.end());
  if (walk.size() > 2 && walk.back() < walk[1]) std::reverse(walk.begin() + 1, walk.end());
  return Cycle{std::move(walk)};
}

std::vector<EdgeId> sorted_ids(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Length of the shortest cycle in a graph without loops or parallel edges.
int simple_girth_length(const TrivalentGraph& g) {
  const int n = g.vertex_count();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<HalfEdge> via(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    via[static_cast<std::size_t>(root)] = -1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (HalfEdge h : g.incident(v)) {
        if (via[static_cast<std::size_t>(v)] >= 0 &&
            h == TrivalentGraph::partner(via[static_cast<std::size_t>(v)])) {
          continue;
        }
        const Vertex w = g.owner(TrivalentGraph::partner(h));
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          via[static_cast<std::size_t>(w)] = h;
          q.push(w);
        } else {
          best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best;
}

// Depth-first enumeration of simple cycles of exactly `target` edges through
// `start`, keeping the one with the smallest sorted ID list.
void smallest_cycle_through(const TrivalentGraph& g, Vertex start, int target,
                            std::vector<EdgeId>& walk, std::vector<char>& on_path,
                            Vertex v, std::optional<std::vector<EdgeId>>& best_sorted,
                            std::vector<EdgeId>& best_walk) {
  const int depth = static_cast<int>(walk.size());
  for (HalfEdge h : g.incident(v)) {
    const int slot = TrivalentGraph::slot_of(h);
    const EdgeId id = g.id_at(slot);
    if (!walk.empty() && walk.back() == id) continue;
    const Vertex w = g.owner(TrivalentGraph::partner(h));
    if (w == start && depth + 1 == target) {
      walk.push_back(id);
      auto key = sorted_ids(walk);
      if (!best_sorted || key < *best_sorted) {
        best_sorted = std::move(key);
        best_walk = walk;
      }
      walk.pop_back();
      continue;
    }
    if (depth + 1 >= target || on_path[static_cast<std::size_t>(w)]) continue;
    on_path[static_cast<std::size_t>(w)] = 1;
    walk.push_back(id);
    smallest_cycle_through(g, start, target, walk, on_path, w, best_sorted, best_walk);
    walk.pop_back();
    on_path[static_cast<std::size_t>(w)] = 0;
  }
}

}  // namespace

GirthResult girth(const TrivalentGraph& g) {
  std::optional<EdgeId> best_loop;
  for (int k = 0; k < g.edge_count(); ++k) {
    if (g.is_loop_slot(k) && (!best_loop || g.id_at(k) < *best_loop)) best_loop = g.id_at(k);
  }
  if (best_loop) return {1, Cycle{{*best_loop}}};

  std::optional<std::pair<EdgeId, EdgeId>> best_pair;
  for (int a = 0; a < g.edge_count(); ++a) {
    auto [u1, v1] = g.endpoints(a);
    for (int b = a + 1; b < g.edge_count(); ++b) {
      auto [u2, v2] = g.endpoints(b);
      if ((u1 == u2 && v1 == v2) || (u1 == v2 && v1 == u2)) {
        const EdgeId x = g.id_at(a), y = g.id_at(b);
        const std::pair<EdgeId, EdgeId> p{std::min(x, y), std::max(x, y)};
        if (!best_pair || p < *best_pair) best_pair = p;
      }
    }
  }
  if (best_pair) return {2, Cycle{{best_pair->first, best_pair->second}}};

  const int length = simple_girth_length(g);
  std::optional<std::vector<EdgeId>> best_sorted;
  std::vector<EdgeId> best_walk;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<EdgeId> walk;
    on_path[static_cast<std::size_t>(s)] = 1;
    smallest_cycle_through(g, s, length, walk, on_path, s, best_sorted, best_walk);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return {length, orient(std::move(best_walk))};
}

std::vector<Vertex> cycle_vertices(const TrivalentGraph& g, const Cycle& c) {
  const std::size_t len = c.length();
  if (len == 0) throw Error(ErrorCode::BadParameters, "empty cycle");
  std::vector<int> slots;
  slots.reserve(len);
  for (EdgeId id : c.edges) {
    auto s = g.find_slot(id);
    if (!s) throw Error(ErrorCode::BadParameters, "cycle edge " + std::to_string(id) + " not in graph");
    slots.push_back(*s);
  }
  if (len == 1) {
    if (!g.is_loop_slot(slots[0])) throw Error(ErrorCode::BadParameters, "1-cycle is not a loop");
    return {g.owner(2 * slots[0])};
  }
  auto shares = [&](int slot, Vertex v) {
    auto [a, b] = g.endpoints(slot);
    return a == v || b == v;
  };
  auto other_end = [&](int slot, Vertex v) {
    auto [a, b] = g.endpoints(slot);
    return a == v ? b : a;
  };
  Vertex start;
  if (len == 2) {
    start = g.endpoints(slots[0]).first;
  } else {
    auto [a, b] = g.endpoints(slots[0]);
    start = shares(slots[len - 1], a) ? a : b;
  }
  std::vector<Vertex> verts;
  verts.reserve(len);
  std::vector<char> seen_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> seen_slot(static_cast<std::size_t>(g.edge_count()), 0);
  Vertex cur = start;
  for (std::size_t i = 0; i < len; ++i) {
    const int s = slots[i];
    if (g.is_loop_slot(s) || !shares(s, cur) || seen_vertex[static_cast<std::size_t>(cur)] ||
        seen_slot[static_cast<std::size_t>(s)]) {
      throw Error(ErrorCode::BadParameters, "edge list is not a simple cycle");
    }
    seen_vertex[static_cast<std::size_t>(cur)] = 1;
    seen_slot[static_cast<std::size_t>(s)] = 1;
    verts.push_back(cur);
    cur = other_end(s, cur);
  }
  if (cur != start) throw Error(ErrorCode::BadParameters, "cycle does not close");
  return verts;
}

bool is_simple_cycle(const TrivalentGraph& g, const Cycle& c) {
  try {
    cycle_vertices(g, c);
    return true;
  } catch (const Error&) {
    return false;
  }
}

TrivalentGraph make_oloops(int genus) {
  if (genus < 2) throw Error(ErrorCode::BadGenus, "genus must be >= 2");
  if (genus == 2) return TrivalentGraph::from_edge_list(2, {{0, 0}, {0, 1}, {1, 1}});
  const int core = genus - 2;
  const int n = 2 * genus - 2;
  EdgeList edges;
  for (int i = 0; i + 1 < core; ++i) edges.emplace_back(i, i + 1);
  Vertex next_pendant = core;
  auto attach = [&](Vertex c) {
    edges.emplace_back(c, next_pendant);
    edges.emplace_back(next_pendant, next_pendant);
    ++next_pendant;
  };
  for (int i = 0; i < core; ++i) {
    const int core_degree = (core == 1) ? 0 : ((i == 0 || i == core - 1) ? 1 : 2);
    for (int k = 0; k < 3 - core_degree; ++k) attach(i);
  }
  return TrivalentGraph::from_edge_list(n, edges);
}

TrivalentGraph relabel_vertices(const TrivalentGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) {
    throw Error(ErrorCode::BadParameters, "permutation size mismatch");
  }
  std::vector<Vertex> owners(g.owners().begin(), g.owners().end());
  for (auto& v : owners) v = perm[static_cast<std::size_t>(v)];
  return TrivalentGraph(g.vertex_count(), std::move(owners),
                        std::vector<EdgeId>(g.edge_ids().begin(), g.edge_ids().end()),
                        g.next_edge_id());
}

nlohmann::ordered_json graph_to_json(const TrivalentGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

TrivalentGraph graph_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw Error(ErrorCode::ParseError, "graph object needs \"vertices\" and \"edges\"");
  }
  const auto& nv = j.at("vertices");
  const auto& ev = j.at("edges");
  if (!nv.is_number_integer() || !ev.is_array()) {
    throw Error(ErrorCode::ParseError, "\"vertices\" must be an integer, \"edges\" an array");
  }
  EdgeList edges;
  for (const auto& e : ev) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return TrivalentGraph::from_edge_list(nv.get<int>(), edges);
}

std::string serialize(const TrivalentGraph& g) { return graph_to_json(g).dump(); }

TrivalentGraph parse_graph(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return graph_from_json(j);
}

}  // namespace pants
