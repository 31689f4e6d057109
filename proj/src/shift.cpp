#include "pants/shift.hpp"

#include <algorithm>

#include "pants/error.hpp"

namespace pants {

namespace {

int require_shiftable_slot(const TrivalentGraph& g, EdgeId id) {
  const auto slot = g.find_slot(id);
  if (!slot) throw Error(ErrorCode::IllegalMove, "edge " + std::to_string(id) + " not in graph");
  if (g.is_loop_slot(*slot)) throw Error(ErrorCode::IllegalMove, "edge " + std::to_string(id) + " is a loop");
  return *slot;
}

std::array<HalfEdge, 2> others_at(const TrivalentGraph& g, Vertex v, HalfEdge skip) {
  std::array<HalfEdge, 2> out{};
  std::size_t i = 0;
  for (HalfEdge h : g.incident(v)) {
    if (h != skip) out[i++] = h;
  }
  auto key = [&](HalfEdge h) { return std::pair{g.owner(TrivalentGraph::partner(h)), h}; };
  if (key(out[1]) < key(out[0])) std::swap(out[0], out[1]);
  return out;
}

int count_earlier_parallel(const TrivalentGraph& g, int slot) {
  auto [u, v] = g.endpoints(slot);
  int occ = 0;
  for (int k = 0; k < slot; ++k) {
    auto [x, y] = g.endpoints(k);
    if ((x == u && y == v) || (x == v && y == u)) ++occ;
  }
  return occ;
}

}  // namespace

std::array<HalfEdge, 4> shift_half_edges(const TrivalentGraph& g, int slot) {
  const HalfEdge h0 = 2 * slot;
  const HalfEdge h1 = h0 + 1;
  const auto at1 = others_at(g, g.owner(h0), h0);
  const auto at2 = others_at(g, g.owner(h1), h1);
  return {at1[0], at1[1], at2[0], at2[1]};
}

std::vector<ShiftMove> enumerate_shifts(const TrivalentGraph& g) {
  std::vector<ShiftMove> out;
  out.reserve(static_cast<std::size_t>(2 * g.edge_count()));
  for (int k = 0; k < g.edge_count(); ++k) {
    if (g.is_loop_slot(k)) continue;
    out.push_back({g.id_at(k), 0});
    out.push_back({g.id_at(k), 1});
  }
  return out;
}

TrivalentGraph apply_shift(const TrivalentGraph& g, const ShiftMove& m) {
  if (m.pairing != 0 && m.pairing != 1) throw Error(ErrorCode::IllegalMove, "pairing must be 0 or 1");
  const int slot = require_shiftable_slot(g, m.edge);
  const auto [a, b, c, d] = shift_half_edges(g, slot);
  const HalfEdge with_a = m.pairing == 0 ? c : d;
  const HalfEdge with_b = m.pairing == 0 ? d : c;
  const Vertex v1 = g.owner(2 * slot);
  const Vertex v2 = g.owner(2 * slot + 1);

  std::vector<Vertex> owners(g.owners().begin(), g.owners().end());
  for (HalfEdge h : {a, with_a}) owners[static_cast<std::size_t>(h)] = v1;
  for (HalfEdge h : {b, with_b}) owners[static_cast<std::size_t>(h)] = v2;
  std::vector<EdgeId> ids(g.edge_ids().begin(), g.edge_ids().end());
  ids[static_cast<std::size_t>(slot)] = g.next_edge_id();
  return TrivalentGraph(g.vertex_count(), std::move(owners), std::move(ids), g.next_edge_id() + 1);
}

int pairing_grouping(const TrivalentGraph& g, int slot, HalfEdge x, HalfEdge y) {
  const auto [a, b, c, d] = shift_half_edges(g, slot);
  auto on_v1 = [&](HalfEdge h) { return h == a || h == b; };
  auto on_v2 = [&](HalfEdge h) { return h == c || h == d; };
  if (on_v2(x) && on_v1(y)) std::swap(x, y);
  if (!on_v1(x) || !on_v2(y)) {
    throw Error(ErrorCode::IllegalMove, "half-edges do not straddle the shifted edge");
  }
  const bool x_is_a = x == a;
  const bool y_is_c = y == c;
  return x_is_a == y_is_c ? 0 : 1;
}

ShiftMove inverse_shift(const TrivalentGraph& g, const ShiftMove& m) {
  const auto after = apply_shift(g, m);
  const int slot = *g.find_slot(m.edge);
  const auto [a, b, c, d] = shift_half_edges(g, slot);
  (void)c;
  (void)d;
  return {after.id_at(slot), pairing_grouping(after, slot, a, b)};
}

ShortenResult shorten_cycle(const TrivalentGraph& g, const Cycle& c) {
  if (c.length() == 1) throw Error(ErrorCode::AlreadyLoop, "cycle is already a loop");
  const auto verts = cycle_vertices(g, c);
  const std::size_t len = c.length();
  const std::size_t j = static_cast<std::size_t>(
      std::min_element(c.edges.begin(), c.edges.end()) - c.edges.begin());
  const std::size_t prev = (j + len - 1) % len;
  const std::size_t next = (j + 1) % len;
  const int slot = *g.find_slot(c.edges[j]);
  auto half_at = [&](EdgeId id, Vertex v) {
    const int s = *g.find_slot(id);
    return g.owner(2 * s) == v ? 2 * s : 2 * s + 1;
  };
  const HalfEdge hp = half_at(c.edges[prev], verts[j]);
  const HalfEdge hn = half_at(c.edges[next], verts[next]);
  const ShiftMove move{c.edges[j], pairing_grouping(g, slot, hp, hn)};
  Cycle shorter;
  shorter.edges.reserve(len - 1);
  for (std::size_t i = 0; i < len; ++i) {
    if (i != j) shorter.edges.push_back(c.edges[i]);
  }
  return {apply_shift(g, move), std::move(shorter), move};
}

std::set<CanonicalForm> neighbors(const TrivalentGraph& g) {
  const auto self = canonical_form(g);
  std::set<CanonicalForm> out;
  for (const auto& m : enumerate_shifts(g)) {
    auto f = canonical_form(apply_shift(g, m));
    if (f != self) out.insert(std::move(f));
  }
  return out;
}

std::vector<TrivalentGraph> replay(const ShiftPath& path) {
  std::vector<TrivalentGraph> states;
  states.reserve(path.moves.size() + 1);
  states.push_back(path.start);
  for (const auto& m : path.moves) states.push_back(apply_shift(states.back(), m));
  return states;
}

TrivalentGraph path_end(const ShiftPath& path) {
  TrivalentGraph cur = path.start;
  for (const auto& m : path.moves) cur = apply_shift(cur, m);
  return cur;
}

nlohmann::ordered_json path_to_json(const ShiftPath& path) {
  nlohmann::ordered_json j;
  j["start"] = graph_to_json(path.start);
  auto moves = nlohmann::ordered_json::array();
  TrivalentGraph cur = path.start;
  for (const auto& m : path.moves) {
    const int slot = require_shiftable_slot(cur, m.edge);
    auto [u, v] = cur.endpoints(slot);
    nlohmann::ordered_json mj;
    mj["edge"] = {u, v};
    mj["occurrence"] = count_earlier_parallel(cur, slot);
    mj["pairing"] = m.pairing;
    moves.push_back(std::move(mj));
    cur = apply_shift(cur, m);
  }
  j["moves"] = std::move(moves);
  return j;
}

ShiftPath path_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("moves") || !j.at("moves").is_array()) {
    throw Error(ErrorCode::ParseError, "path object needs \"start\" and a \"moves\" array");
  }
  ShiftPath path{graph_from_json(j.at("start")), {}};
  TrivalentGraph cur = path.start;
  for (const auto& mj : j.at("moves")) {
    if (!mj.is_object() || !mj.contains("edge") || !mj.contains("pairing") || !mj.at("edge").is_array() ||
        mj.at("edge").size() != 2) {
      throw Error(ErrorCode::ParseError, "move needs \"edge\":[u,v] and \"pairing\"");
    }
    const int u = mj.at("edge")[0].get<int>();
    const int v = mj.at("edge")[1].get<int>();
    const int occurrence = mj.value("occurrence", 0);
    const int pairing = mj.at("pairing").get<int>();
    if (pairing != 0 && pairing != 1) throw Error(ErrorCode::ParseError, "pairing must be 0 or 1");
    std::optional<int> slot;
    int seen = 0;
    for (int k = 0; k < cur.edge_count() && !slot; ++k) {
      auto [x, y] = cur.endpoints(k);
      if ((x == u && y == v) || (x == v && y == u)) {
        if (seen++ == occurrence) slot = k;
      }
    }
    if (!slot) throw Error(ErrorCode::IllegalMove, "no edge matches a move in the path");
    if (cur.is_loop_slot(*slot)) throw Error(ErrorCode::IllegalMove, "move on a loop");
    ShiftMove m{cur.id_at(*slot), pairing};
    if (cur.owner(2 * *slot) != u) {
      // Written from the other endpoint: translate the grouping it names.
      const auto [a, b, c, d] = shift_half_edges(cur, *slot);
      (void)b;
      m.pairing = pairing_grouping(cur, *slot, c, pairing == 0 ? a : b);
    }
    path.moves.push_back(m);
    cur = apply_shift(cur, m);
  }
  return path;
}

}  // namespace pants
