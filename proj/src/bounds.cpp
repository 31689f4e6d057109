#include "pants/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <span>

#include "pants/canonical.hpp"
#include "pants/error.hpp"

namespace pants {

double log2_factorial(int n) {
  double sum = 0.0;
  for (int i = 2; i <= n; ++i) sum += std::log2(static_cast<double>(i));
  return sum;
}

namespace {

void require_genus(int genus) {
  if (genus < 2) throw Error(ErrorCode::BadGenus, "genus must be >= 2");
}

void require_matching_genus(const TrivalentGraph& g, int genus) {
  require_genus(genus);
  if (g.genus() != genus) {
    throw Error(ErrorCode::BadGenus, "graph has genus " + std::to_string(g.genus()) + ", expected " +
                                         std::to_string(genus));
  }
}

std::string level_tag(int genus, const char* stage) { return "g" + std::to_string(genus) + "." + stage; }

}  // namespace

double pull_loops_bound(int genus) {
  require_genus(genus);
  return 2.0 * genus - 3.0 + 2.0 * log2_factorial(genus - 1);
}

double flatten_bound(int genus) {
  require_genus(genus);
  return static_cast<double>(std::max(0, genus - 5));
}

double oloops_path_bound(int genus) { return pull_loops_bound(genus) + flatten_bound(genus); }

double diameter_bound(int genus) {
  require_genus(genus);
  const double lf = 4.0 * log2_factorial(genus - 1);
  return genus <= 5 ? lf + 4.0 * genus - 6.0 : lf + 6.0 * genus - 16.0;
}

MakeLoopResult make_loop(const TrivalentGraph& g) {
  ShiftPath path{g, {}};
  TrivalentGraph cur = g;
  Cycle cycle = girth(g).witness;
  while (cycle.length() > 1) {
    auto step = shorten_cycle(cur, cycle);
    path.moves.push_back(step.move);
    cur = std::move(step.graph);
    cycle = std::move(step.cycle);
  }
  return {std::move(cur), std::move(path)};
}

namespace {

struct SurgeryDetail {
  SurgeryResult result;
  /// Big-graph slot of each small-graph slot except the joined one (last).
  std::vector<int> kept_slots;
  /// Big half-edges at the far ends of the two split edges; they become the
  /// two halves of the joined edge.
  HalfEdge far_first = -1;
  HalfEdge far_second = -1;
};

SurgeryDetail surgery_detail(const TrivalentGraph& g, EdgeId loop_edge) {
  if (g.genus() < 3) throw Error(ErrorCode::GenusTooSmall, "loop surgery needs genus >= 3");
  const auto loop_slot = g.find_slot(loop_edge);
  if (!loop_slot || !g.is_loop_slot(*loop_slot)) {
    throw Error(ErrorCode::NoLoop, "edge " + std::to_string(loop_edge) + " is not a loop");
  }
  const Vertex v = g.owner(2 * *loop_slot);
  HalfEdge hy = -1;
  for (HalfEdge h : g.incident(v)) {
    if (TrivalentGraph::slot_of(h) != *loop_slot) hy = h;
  }
  const int y_slot = TrivalentGraph::slot_of(hy);
  const HalfEdge w_half = TrivalentGraph::partner(hy);
  const Vertex w = g.owner(w_half);
  std::array<HalfEdge, 2> rest{};
  std::size_t r = 0;
  for (HalfEdge h : g.incident(w)) {
    if (h != w_half) rest[r++] = h;
  }
  if (TrivalentGraph::slot_of(rest[0]) == TrivalentGraph::slot_of(rest[1])) {
    throw Error(ErrorCode::GenusTooSmall, "loop-edge-loop configuration is the whole genus-2 graph");
  }
  const HalfEdge fx = TrivalentGraph::partner(rest[0]);
  const HalfEdge fy = TrivalentGraph::partner(rest[1]);

  std::vector<Vertex> vmap(static_cast<std::size_t>(g.vertex_count()), -1);
  Vertex next = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u != v && u != w) vmap[static_cast<std::size_t>(u)] = next++;
  }
  SurgeryDetail out{{g, {}}, {}, fx, fy};
  std::vector<Vertex> owners;
  std::vector<EdgeId> ids;
  const int split_a = TrivalentGraph::slot_of(rest[0]);
  const int split_b = TrivalentGraph::slot_of(rest[1]);
  for (int k = 0; k < g.edge_count(); ++k) {
    if (k == *loop_slot || k == y_slot || k == split_a || k == split_b) continue;
    owners.push_back(vmap[static_cast<std::size_t>(g.owner(2 * k))]);
    owners.push_back(vmap[static_cast<std::size_t>(g.owner(2 * k + 1))]);
    ids.push_back(g.id_at(k));
    out.kept_slots.push_back(k);
  }
  owners.push_back(vmap[static_cast<std::size_t>(g.owner(fx))]);
  owners.push_back(vmap[static_cast<std::size_t>(g.owner(fy))]);
  const EdgeId joined = g.next_edge_id();
  ids.push_back(joined);

  SurgeryRecord rec;
  rec.loop_edge = loop_edge;
  rec.loop_vertex = v;
  rec.y_edge = g.id_at(y_slot);
  rec.attach_vertex = w;
  rec.split_edges = {g.id_at(split_a), g.id_at(split_b)};
  rec.joined_edge = joined;
  rec.vertex_map = std::move(vmap);
  out.result = {TrivalentGraph(g.vertex_count() - 2, std::move(owners), std::move(ids), joined + 1),
                std::move(rec)};
  return out;
}

EdgeId first_canonical_loop(const TrivalentGraph& g) {
  const auto lab = canonical_labeling(g);
  for (Vertex v : lab.order) {
    for (HalfEdge h : g.incident(v)) {
      if (g.is_loop_slot(TrivalentGraph::slot_of(h))) return g.id_at(TrivalentGraph::slot_of(h));
    }
  }
  throw Error(ErrorCode::NoLoop, "graph has no loop");
}

struct TaggedPath {
  std::vector<ShiftMove> moves;
  std::vector<std::string> tags;
  TrivalentGraph end;
};

// Carries a path on the surgered graph back to the graph before surgery.
//
// phi_ maps small half-edges to big half-edges. Every small edge except the
// carrier maps to one big edge; the carrier's two halves map to the outer
// halves of the two big edges meeting at the attachment vertex w of Y.
class Lift {
 public:
  Lift(const TrivalentGraph& big, const SurgeryDetail& s, int genus)
      : genus_(genus),
        big_(big),
        small_(s.result.graph),
        phi_(static_cast<std::size_t>(s.result.graph.half_edge_count()), -1),
        y_edge_(s.result.record.y_edge),
        y_loop_(s.result.record.loop_edge) {
    for (std::size_t i = 0; i < s.kept_slots.size(); ++i) {
      phi_[2 * i] = 2 * s.kept_slots[i];
      phi_[2 * i + 1] = 2 * s.kept_slots[i] + 1;
    }
    carrier_ = static_cast<int>(s.kept_slots.size());
    phi_[static_cast<std::size_t>(2 * carrier_)] = s.far_first;
    phi_[static_cast<std::size_t>(2 * carrier_ + 1)] = s.far_second;
    check();
  }

  void apply(const ShiftMove& m, const std::string& tag, std::span<const ShiftMove> upcoming) {
    const auto slot = small_.find_slot(m.edge);
    if (!slot) throw Error(ErrorCode::LiftInvariantViolation, "small move references a missing edge");
    if (*slot == carrier_) move_y_off_carrier(*slot, upcoming);
    lift_plain(*slot, m, tag);
    check();
  }

  // Y sitting on a loop of the small graph leaves a 2-cycle in the big one.
  void close_loop() {
    if (!small_.is_loop_slot(carrier_)) return;
    const int j1 = TrivalentGraph::slot_of(phi(2 * carrier_));
    const int j2 = TrivalentGraph::slot_of(phi(2 * carrier_ + 1));
    auto step = shorten_cycle(big_, Cycle{{big_.id_at(j1), big_.id_at(j2)}});
    record(step.move, level_tag(genus_, "close_loop"));
    big_ = std::move(step.graph);
  }

  const TrivalentGraph& big() const noexcept { return big_; }
  std::vector<ShiftMove>& moves() noexcept { return moves_; }
  std::vector<std::string>& tags() noexcept { return tags_; }

 private:
  HalfEdge phi(int h) const { return phi_[static_cast<std::size_t>(h)]; }
  void set_phi(int h, HalfEdge to) { phi_[static_cast<std::size_t>(h)] = to; }

  void record(const ShiftMove& m, std::string tag) {
    moves_.push_back(m);
    tags_.push_back(std::move(tag));
  }

  HalfEdge y_half_at_attachment() const {
    const int ys = *big_.find_slot(y_edge_);
    const Vertex loop_vertex = big_.owner(2 * *big_.find_slot(y_loop_));
    return big_.owner(2 * ys) == loop_vertex ? 2 * ys + 1 : 2 * ys;
  }

  // The small move collapses the carrier, which has no single big image.
  // First shift the big edge p-w so that Y moves onto another edge at p; the
  // carrier then maps to one big edge and the original move lifts directly.
  void move_y_off_carrier(int k, std::span<const ShiftMove> upcoming) {
    const auto [a, b, c, d] = shift_half_edges(small_, k);
    (void)c;
    (void)d;
    // Hand Y to whichever edge at p is collapsed later (or never) in the rest
    // of the small path.
    auto next_use = [&](HalfEdge h) {
      const EdgeId id = small_.id_at(TrivalentGraph::slot_of(h));
      for (std::size_t i = 0; i < upcoming.size(); ++i) {
        if (upcoming[i].edge == id) return i;
      }
      return std::numeric_limits<std::size_t>::max();
    };
    const HalfEdge give = next_use(b) > next_use(a) ? b : a;
    const HalfEdge keep = give == a ? b : a;

    const int j1 = TrivalentGraph::slot_of(phi(2 * k));
    const HalfEdge j2_at_w = TrivalentGraph::partner(phi(2 * k + 1));
    const HalfEdge y_at_w = y_half_at_attachment();
    if (big_.owner(j2_at_w) != big_.owner(y_at_w)) {
      throw Error(ErrorCode::LiftInvariantViolation, "carrier does not pass through Y's attachment vertex");
    }
    const ShiftMove shift{big_.id_at(j1), pairing_grouping(big_, j1, phi(keep), j2_at_w)};
    big_ = apply_shift(big_, shift);
    record(shift, level_tag(genus_, "lift"));

    set_phi(2 * k, j2_at_w);
    const Vertex at_p = big_.owner(phi(keep));
    set_phi(give, big_.owner(2 * j1) == at_p ? 2 * j1 : 2 * j1 + 1);
    carrier_ = TrivalentGraph::slot_of(give);
  }

  void lift_plain(int k, const ShiftMove& m, const std::string& tag) {
    const auto [a, b, c, d] = shift_half_edges(small_, k);
    (void)b;
    const HalfEdge with_a = m.pairing == 0 ? c : d;
    const int big_slot = TrivalentGraph::slot_of(phi(2 * k));
    if (TrivalentGraph::partner(phi(2 * k)) != phi(2 * k + 1)) {
      throw Error(ErrorCode::LiftInvariantViolation, "small edge has no single big image");
    }
    const ShiftMove shift{big_.id_at(big_slot), pairing_grouping(big_, big_slot, phi(a), phi(with_a))};
    big_ = apply_shift(big_, shift);
    small_ = apply_shift(small_, m);
    record(shift, tag);
    const Vertex at_a = big_.owner(phi(a));
    const HalfEdge even = big_.owner(2 * big_slot) == at_a ? 2 * big_slot : 2 * big_slot + 1;
    set_phi(2 * k, even);
    set_phi(2 * k + 1, TrivalentGraph::partner(even));
  }

  void check() const {
    const HalfEdge y_at_w = y_half_at_attachment();
    const Vertex w = big_.owner(y_at_w);
    if (big_.owner(TrivalentGraph::partner(phi(2 * carrier_))) != w ||
        big_.owner(TrivalentGraph::partner(phi(2 * carrier_ + 1))) != w) {
      throw Error(ErrorCode::LiftInvariantViolation, "carrier halves lost the attachment vertex");
    }
    for (int h = 0; h < small_.half_edge_count(); ++h) {
      if (TrivalentGraph::slot_of(h) == carrier_) continue;
      if (TrivalentGraph::partner(phi(h)) != phi(TrivalentGraph::partner(h))) {
        throw Error(ErrorCode::LiftInvariantViolation, "half-edge map does not respect partners");
      }
    }
    const auto cut = surgery_detail(big_, y_loop_).result.graph;
    if (!is_isomorphic(cut, small_)) {
      throw Error(ErrorCode::LiftInvariantViolation, "lifted graph no longer reduces to the small graph");
    }
  }

  int genus_;
  TrivalentGraph big_;
  TrivalentGraph small_;
  std::vector<HalfEdge> phi_;
  int carrier_ = -1;
  EdgeId y_edge_;
  EdgeId y_loop_;
  std::vector<ShiftMove> moves_;
  std::vector<std::string> tags_;
};

TaggedPath pull_loops_recursive(const TrivalentGraph& g) {
  const int genus = g.genus();
  auto made = make_loop(g);
  if (genus == 2) {
    TaggedPath out{made.path.moves, std::vector<std::string>(made.path.moves.size(), level_tag(2, "base")),
                   made.graph};
    if (loop_count(out.end) != 2) {
      throw Error(ErrorCode::LiftInvariantViolation, "genus-2 base case did not reach the dumbbell");
    }
    return out;
  }
  const auto surgery = surgery_detail(made.graph, first_canonical_loop(made.graph));
  const auto sub = pull_loops_recursive(surgery.result.graph);

  Lift lift(made.graph, surgery, genus);
  for (std::size_t i = 0; i < sub.moves.size(); ++i) {
    lift.apply(sub.moves[i], sub.tags[i], std::span(sub.moves).subspan(i + 1));
  }
  lift.close_loop();
  if (loop_count(lift.big()) != genus) {
    throw Error(ErrorCode::LiftInvariantViolation,
                "lifted path ends with " + std::to_string(loop_count(lift.big())) + " loops at genus " +
                    std::to_string(genus));
  }
  TaggedPath out{made.path.moves,
                 std::vector<std::string>(made.path.moves.size(), level_tag(genus, "make_loop")), lift.big()};
  out.moves.insert(out.moves.end(), lift.moves().begin(), lift.moves().end());
  out.tags.insert(out.tags.end(), lift.tags().begin(), lift.tags().end());
  return out;
}

std::vector<StageLength> tally_stages(int genus, const std::vector<std::string>& tags) {
  std::vector<StageLength> stages;
  for (int g = genus; g >= 3; --g) {
    for (const char* s : {"make_loop", "lift", "close_loop"}) stages.push_back({level_tag(g, s), 0});
  }
  stages.push_back({level_tag(2, "base"), 0});
  for (const auto& t : tags) {
    auto it = std::find_if(stages.begin(), stages.end(), [&](const StageLength& s) { return s.stage == t; });
    if (it == stages.end()) throw Error(ErrorCode::LiftInvariantViolation, "unexpected stage tag " + t);
    ++it->length;
  }
  return stages;
}

}  // namespace

SurgeryResult loop_surgery(const TrivalentGraph& g) {
  if (g.genus() < 3) throw Error(ErrorCode::GenusTooSmall, "loop surgery needs genus >= 3");
  return surgery_detail(g, first_canonical_loop(g)).result;
}

SurgeryResult loop_surgery_at(const TrivalentGraph& g, EdgeId loop_edge) {
  return surgery_detail(g, loop_edge).result;
}

BoundCertificate pull_all_loops(const TrivalentGraph& g, int genus) {
  require_matching_genus(g, genus);
  auto tagged = pull_loops_recursive(g);
  BoundCertificate cert{ShiftPath{g, std::move(tagged.moves)}, pull_loops_bound(genus),
                        tally_stages(genus, tagged.tags), std::move(tagged.end)};
  return cert;
}

namespace {

struct CoreSpine {
  std::vector<Vertex> spine;
  /// Interior spine position with a core neighbour off the spine, or -1.
  int branch_at = -1;
  Vertex branch_vertex = -1;
};

CoreSpine analyse_core(const TrivalentGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> core(static_cast<std::size_t>(n), 1);
  for (int k = 0; k < g.edge_count(); ++k) {
    if (g.is_loop_slot(k)) core[static_cast<std::size_t>(g.owner(2 * k))] = 0;
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [u, v] = g.endpoints(k);
    if (u != v && core[static_cast<std::size_t>(u)] && core[static_cast<std::size_t>(v)]) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  CoreSpine out;
  const auto first = std::find(core.begin(), core.end(), 1);
  if (first == core.end()) return out;

  auto farthest = [&](Vertex from, std::vector<Vertex>& parent) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    parent.assign(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(from)] = 0;
    q.push(from);
    Vertex best = from;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)] ||
          (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(best)] && v < best)) {
        best = v;
      }
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          q.push(w);
        }
      }
    }
    return best;
  };
  std::vector<Vertex> parent;
  const Vertex s = farthest(static_cast<Vertex>(first - core.begin()), parent);
  const Vertex t = farthest(s, parent);
  for (Vertex v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) out.spine.push_back(v);

  std::vector<char> on_spine(static_cast<std::size_t>(n), 0);
  for (Vertex v : out.spine) on_spine[static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 1; i + 1 < out.spine.size(); ++i) {
    for (Vertex w : adj[static_cast<std::size_t>(out.spine[i])]) {
      if (!on_spine[static_cast<std::size_t>(w)]) {
        out.branch_at = static_cast<int>(i);
        out.branch_vertex = w;
        return out;
      }
    }
  }
  return out;
}

// Interchange across the edge spine[i] - branch vertex t: the spine gains t,
// one of t's two subtrees hangs on each of the two new spine vertices.
ShiftMove branch_interchange(const TrivalentGraph& g, const CoreSpine& cs) {
  const auto i = static_cast<std::size_t>(cs.branch_at);
  const Vertex s = cs.spine[i];
  const Vertex prev = cs.spine[i - 1];
  const Vertex t = cs.branch_vertex;
  int slot = -1;
  HalfEdge toward_prev = -1;
  for (HalfEdge h : g.incident(s)) {
    const Vertex far = g.owner(TrivalentGraph::partner(h));
    if (far == t) slot = TrivalentGraph::slot_of(h);
    if (far == prev) toward_prev = h;
  }
  const auto halves = shift_half_edges(g, slot);
  const bool t_is_first = g.owner(2 * slot) == t;
  const HalfEdge from_t = t_is_first ? halves[0] : halves[2];
  return {g.id_at(slot), pairing_grouping(g, slot, toward_prev, from_t)};
}

}  // namespace

BoundCertificate flatten_to_oloops(const TrivalentGraph& g, int genus) {
  require_matching_genus(g, genus);
  if (loop_count(g) != genus) {
    throw Error(ErrorCode::WrongLoopCount, "graph has " + std::to_string(loop_count(g)) + " loops, expected " +
                                               std::to_string(genus));
  }
  const auto target = canonical_form(make_oloops(genus));
  const int cap = std::max(0, genus - 5) + 1;
  ShiftPath path{g, {}};
  TrivalentGraph cur = g;
  while (canonical_form(cur) != target) {
    if (static_cast<int>(path.moves.size()) >= cap) {
      throw Error(ErrorCode::BoundViolation, "flattening did not reach O_loops within " + std::to_string(cap) +
                                                 " shifts");
    }
    const auto cs = analyse_core(cur);
    if (cs.branch_at < 0) {
      throw Error(ErrorCode::WrongLoopCount, "core is a path but the graph is not the standard loop graph");
    }
    const auto move = branch_interchange(cur, cs);
    cur = apply_shift(cur, move);
    path.moves.push_back(move);
  }
  const int len = static_cast<int>(path.moves.size());
  return {std::move(path), flatten_bound(genus), {{"flatten", len}}, std::move(cur)};
}

BoundCertificate path_to_oloops(const TrivalentGraph& g, int genus) {
  auto pulled = pull_all_loops(g, genus);
  auto flat = flatten_to_oloops(pulled.end, genus);
  BoundCertificate cert{std::move(pulled.path), oloops_path_bound(genus), std::move(pulled.stage_lengths),
                        std::move(flat.end)};
  cert.path.moves.insert(cert.path.moves.end(), flat.path.moves.begin(), flat.path.moves.end());
  cert.stage_lengths.insert(cert.stage_lengths.end(), flat.stage_lengths.begin(), flat.stage_lengths.end());
  return cert;
}

ShiftPath reverse_path_from(const ShiftPath& p, const TrivalentGraph& start) {
  const auto states = replay(p);
  auto iso = find_isomorphism(states.back(), start);
  if (!iso) throw Error(ErrorCode::BadParameters, "start graph is not isomorphic to the path's end");
  std::vector<HalfEdge> pi = std::move(*iso);
  ShiftPath out{start, {}};
  TrivalentGraph cur = start;
  for (std::size_t i = p.moves.size(); i-- > 0;) {
    const TrivalentGraph& before = states[i];
    const int slot = *before.find_slot(p.moves[i].edge);
    const auto halves = shift_half_edges(before, slot);
    const HalfEdge a = halves[0];
    const HalfEdge b = halves[1];
    const int target = TrivalentGraph::slot_of(pi[static_cast<std::size_t>(2 * slot)]);
    const ShiftMove m{cur.id_at(target), pairing_grouping(cur, target, pi[static_cast<std::size_t>(a)],
                                                          pi[static_cast<std::size_t>(b)])};
    cur = apply_shift(cur, m);
    out.moves.push_back(m);
    const Vertex at_a = cur.owner(pi[static_cast<std::size_t>(a)]);
    const HalfEdge even = cur.owner(2 * target) == at_a ? 2 * target : 2 * target + 1;
    pi[static_cast<std::size_t>(2 * slot)] = even;
    pi[static_cast<std::size_t>(2 * slot + 1)] = TrivalentGraph::partner(even);
  }
  return out;
}

BoundCertificate path_between(const TrivalentGraph& a, const TrivalentGraph& b) {
  if (a.genus() != b.genus()) throw Error(ErrorCode::BadGenus, "graphs have different genus");
  const int genus = a.genus();
  auto from = path_to_oloops(a, genus);
  auto to = path_to_oloops(b, genus);
  const auto back = reverse_path_from(to.path, from.end);
  ShiftPath path{a, from.path.moves};
  path.moves.insert(path.moves.end(), back.moves.begin(), back.moves.end());
  auto end = path_end(path);
  return {std::move(path),
          diameter_bound(genus),
          {{"to_oloops", static_cast<int>(from.path.length())}, {"from_oloops", static_cast<int>(back.length())}},
          std::move(end)};
}

std::string certificate_problem(const BoundCertificate& cert) {
  TrivalentGraph end = cert.path.start;
  try {
    end = path_end(cert.path);
  } catch (const Error& e) {
    return std::string("path does not replay: ") + e.what();
  }
  if (!end.same_structure(cert.end)) return "recorded end graph differs from the replayed one";
  int total = 0;
  for (const auto& s : cert.stage_lengths) total += s.length;
  if (total != static_cast<int>(cert.path.length())) return "stage lengths do not sum to the path length";
  if (static_cast<double>(cert.path.length()) > cert.claimed_bound) {
    return "path length " + std::to_string(cert.path.length()) + " exceeds bound " +
           std::to_string(cert.claimed_bound);
  }
  return {};
}

nlohmann::ordered_json certificate_to_json(const BoundCertificate& cert) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json stages = nlohmann::ordered_json::object();
  for (const auto& s : cert.stage_lengths) stages[s.stage] = s.length;
  j["stage_lengths"] = std::move(stages);
  j["bound"] = cert.claimed_bound;
  j["path"] = path_to_json(cert.path);
  return j;
}

}  // namespace pants
