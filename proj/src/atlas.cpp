#include "pants/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "pants/error.hpp"
#include "pants/shift.hpp"
#include "parallel.hpp"

namespace pants {

namespace {

using FormMap = std::map<CanonicalForm, TrivalentGraph>;

void insert_canonical(FormMap& into, const TrivalentGraph& g) {
  auto rep = canonical_representative(g);
  auto form = canonical_form(rep);
  into.try_emplace(std::move(form), std::move(rep));
}

std::vector<Orbit> to_orbits(FormMap&& forms) {
  std::vector<Orbit> out;
  out.reserve(forms.size());
  for (auto& [form, rep] : forms) out.push_back({form, std::move(rep)});
  return out;
}

std::vector<Orbit> genus_two_orbits() {
  FormMap forms;
  insert_canonical(forms, TrivalentGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}}));
  insert_canonical(forms, TrivalentGraph::from_edge_list(2, {{0, 0}, {0, 1}, {1, 1}}));
  return to_orbits(std::move(forms));
}

// All one-step augmentations of `parent` (n -> n + 2 vertices).
void augment(const TrivalentGraph& parent, FormMap& out) {
  const int n = parent.vertex_count();
  const Vertex x = n;
  const Vertex y = n + 1;
  const EdgeList edges = parent.edge_list();
  const std::size_t m = edges.size();
  auto without = [&](std::size_t i, std::size_t j) {
    EdgeList rest;
    rest.reserve(m + 3);
    for (std::size_t k = 0; k < m; ++k) {
      if (k != i && k != j) rest.push_back(edges[k]);
    }
    return rest;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = edges[i];
    // Pendant loop vertex hung off a subdivision of edge i.
    {
      EdgeList e = without(i, i);
      e.insert(e.end(), {{a, x}, {x, b}, {x, y}, {y, y}});
      insert_canonical(out, TrivalentGraph::from_edge_list(n + 2, e));
    }
    // Edge i subdivided twice, the two new vertices joined.
    {
      EdgeList e = without(i, i);
      e.insert(e.end(), {{a, x}, {x, y}, {y, b}, {x, y}});
      insert_canonical(out, TrivalentGraph::from_edge_list(n + 2, e));
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [c, d] = edges[j];
      EdgeList e = without(i, j);
      e.insert(e.end(), {{a, x}, {x, b}, {c, y}, {y, d}, {x, y}});
      insert_canonical(out, TrivalentGraph::from_edge_list(n + 2, e));
    }
  }
}

struct PairingSearch {
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> partner;
  std::vector<char> touched;
  FormMap forms;

  int first_free_stub(Vertex v, int after = -1) const {
    for (int s = 3 * v; s < 3 * v + 3; ++s) {
      if (s > after && partner[static_cast<std::size_t>(s)] < 0) return s;
    }
    return -1;
  }

  void record() {
    EdgeList edges;
    for (int s = 0; s < 3 * n; ++s) {
      const int t = partner[static_cast<std::size_t>(s)];
      if (s < t) edges.emplace_back(s / 3, t / 3);
    }
    insert_canonical(forms, TrivalentGraph::from_edge_list(n, edges));
  }

  void join(int s, int t, bool on) {
    partner[static_cast<std::size_t>(s)] = on ? t : -1;
    partner[static_cast<std::size_t>(t)] = on ? s : -1;
  }

  void run() {
    if (++nodes > budget) {
      throw Error(ErrorCode::SearchBudgetExceeded, "pairing-model search exceeded its node budget");
    }
    int s = -1;
    for (int k = 0; k < 3 * n; ++k) {
      if (partner[static_cast<std::size_t>(k)] < 0) {
        s = k;
        break;
      }
    }
    if (s < 0) {
      record();
      return;
    }
    const Vertex v = s / 3;
    // Lowest free stub on an untouched vertex: the touched part is closed off.
    if (!touched[static_cast<std::size_t>(v)]) return;

    if (const int t = first_free_stub(v, s); t >= 0) {
      join(s, t, true);
      run();
      join(s, t, false);
    }
    Vertex fresh = -1;
    for (Vertex w = 0; w < n; ++w) {
      if (w == v) continue;
      if (!touched[static_cast<std::size_t>(w)]) {
        if (fresh < 0) fresh = w;
        continue;
      }
      const int t = first_free_stub(w);
      if (t < 0) continue;
      join(s, t, true);
      run();
      join(s, t, false);
    }
    if (fresh >= 0) {
      const int t = 3 * fresh;
      touched[static_cast<std::size_t>(fresh)] = 1;
      join(s, t, true);
      run();
      join(s, t, false);
      touched[static_cast<std::size_t>(fresh)] = 0;
    }
  }
};

}  // namespace

std::optional<int> OrbitAtlas::index_of(const CanonicalForm& f) const {
  auto it = std::lower_bound(orbits.begin(), orbits.end(), f,
                             [](const Orbit& o, const CanonicalForm& key) { return o.form < key; });
  if (it == orbits.end() || it->form != f) return std::nullopt;
  return static_cast<int>(it - orbits.begin());
}

int OrbitAtlas::require_index(const CanonicalForm& f) const {
  auto idx = index_of(f);
  if (!idx) throw Error(ErrorCode::UnknownForm, "form " + f.hex() + " not in genus-" + std::to_string(genus) + " atlas");
  return *idx;
}

OrbitAtlas enumerate_orbits(int genus, const AtlasOptions& options) {
  if (genus < 2) throw Error(ErrorCode::BadGenus, "genus must be >= 2");
  if (genus > options.max_genus) {
    throw Error(ErrorCode::GenusTooLarge, "genus " + std::to_string(genus) + " exceeds the configured ceiling " +
                                              std::to_string(options.max_genus));
  }
  std::vector<Orbit> level = genus_two_orbits();
  for (int g = 3; g <= genus; ++g) {
    std::vector<FormMap> partial(level.size());
    detail::parallel_for(level.size(), options.threads,
                         [&](std::size_t i) { augment(level[i].representative, partial[i]); });
    FormMap merged;
    for (auto& part : partial) merged.merge(part);
    level = to_orbits(std::move(merged));
  }
  OrbitAtlas atlas;
  atlas.genus = genus;
  atlas.orbits = std::move(level);
  atlas.built_at = std::chrono::system_clock::now();
  return atlas;
}

std::vector<Orbit> enumerate_orbits_pairing_model(int genus, std::uint64_t node_budget) {
  if (genus < 2) throw Error(ErrorCode::BadGenus, "genus must be >= 2");
  const int n = 2 * genus - 2;
  PairingSearch search{n, node_budget, 0, std::vector<int>(static_cast<std::size_t>(3 * n), -1),
                       std::vector<char>(static_cast<std::size_t>(n), 0), {}};
  search.touched[0] = 1;
  search.run();
  return to_orbits(std::move(search.forms));
}

void build_orbit_graph(OrbitAtlas& atlas, int threads) {
  std::vector<std::vector<int>> adj(atlas.size());
  detail::parallel_for(atlas.size(), threads, [&](std::size_t i) {
    for (const auto& f : neighbors(atlas.orbits[i].representative)) adj[i].push_back(atlas.require_index(f));
    std::sort(adj[i].begin(), adj[i].end());
  });
  atlas.adjacency = std::move(adj);
  atlas.has_adjacency = true;
}

OrbitAtlas build_atlas(int genus, const AtlasOptions& options) {
  auto atlas = enumerate_orbits(genus, options);
  build_orbit_graph(atlas, options.threads);
  return atlas;
}

namespace {

void require_adjacency(const OrbitAtlas& atlas) {
  if (!atlas.has_adjacency) throw Error(ErrorCode::BadParameters, "orbit graph adjacency not built");
}

}  // namespace

std::vector<int> bfs_distances(const OrbitAtlas& atlas, std::span<const int> sources) {
  require_adjacency(atlas);
  std::vector<int> dist(atlas.size(), -1);
  std::queue<int> q;
  for (int s : sources) {
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : atlas.adjacency[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int bfs_distance(const OrbitAtlas& atlas, const CanonicalForm& a, const CanonicalForm& b) {
  const int from = atlas.require_index(a);
  const int to = atlas.require_index(b);
  const int src[] = {from};
  return bfs_distances(atlas, src)[static_cast<std::size_t>(to)];
}

std::vector<int> orbit_path(const OrbitAtlas& atlas, int from, int to) {
  require_adjacency(atlas);
  std::vector<int> parent(atlas.size(), -1);
  std::vector<char> seen(atlas.size(), 0);
  std::queue<int> q;
  q.push(from);
  seen[static_cast<std::size_t>(from)] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (v == to) break;
    for (int w : atlas.adjacency[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        q.push(w);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) throw Error(ErrorCode::Disconnected, "orbits are not connected");
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

int diameter(const OrbitAtlas& atlas, int threads) {
  require_adjacency(atlas);
  std::vector<int> ecc(atlas.size(), 0);
  detail::parallel_for(atlas.size(), threads, [&](std::size_t i) {
    const int src[] = {static_cast<int>(i)};
    const auto dist = bfs_distances(atlas, src);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
      throw Error(ErrorCode::Disconnected, "orbit graph is not connected");
    }
    ecc[i] = *std::max_element(dist.begin(), dist.end());
  });
  return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

bool is_connected(const OrbitAtlas& atlas) {
  if (atlas.size() == 0) return true;
  const int src[] = {0};
  const auto dist = bfs_distances(atlas, src);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::string atlas_to_jsonl(const OrbitAtlas& atlas) {
  std::ostringstream out;
  nlohmann::ordered_json header;
  header["format"] = 1;
  header["genus"] = atlas.genus;
  header["orbits"] = atlas.size();
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    nlohmann::ordered_json line;
    line["form"] = atlas.orbits[i].form.hex();
    line["graph"] = graph_to_json(atlas.orbits[i].representative);
    line["adj"] = atlas.has_adjacency ? atlas.adjacency[i] : std::vector<int>{};
    out << line.dump() << '\n';
  }
  return out.str();
}

OrbitAtlas atlas_from_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto parse_line = [](const std::string& s) {
    try {
      return nlohmann::ordered_json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::FormatVersionMismatch, std::string("unreadable atlas line: ") + e.what());
    }
  };
  if (!std::getline(in, line)) throw Error(ErrorCode::FormatVersionMismatch, "empty atlas file");
  const auto header = parse_line(line);
  if (!header.is_object() || header.value("format", -1) != 1) {
    throw Error(ErrorCode::FormatVersionMismatch, "atlas header must carry \"format\":1");
  }
  if (!header.contains("genus") || !header.contains("orbits") || !header["genus"].is_number_integer() ||
      !header["orbits"].is_number_integer()) {
    throw Error(ErrorCode::FormatVersionMismatch, "atlas header needs integer genus and orbits");
  }
  OrbitAtlas atlas;
  atlas.genus = header["genus"].get<int>();
  if (atlas.genus < 2) throw Error(ErrorCode::BadGenus, "atlas genus below 2");
  const auto count = header["orbits"].get<long long>();
  if (count < 0) throw Error(ErrorCode::FormatVersionMismatch, "negative orbit count");
  std::vector<std::vector<int>> adj;
  bool any_adj = false;
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::FormatVersionMismatch, "atlas truncated after " + std::to_string(i) + " orbits");
    }
    const auto j = parse_line(line);
    if (!j.is_object() || !j.contains("form") || !j.contains("graph") || !j.contains("adj")) {
      throw Error(ErrorCode::FormatVersionMismatch, "orbit line needs form, graph and adj");
    }
    auto graph = graph_from_json(j["graph"]);
    if (graph.genus() != atlas.genus) {
      throw Error(ErrorCode::BadGenus, "orbit " + std::to_string(i) + " has genus " +
                                           std::to_string(graph.genus()) + ", header says " +
                                           std::to_string(atlas.genus));
    }
    auto form = CanonicalForm::from_hex(j["form"].get<std::string>());
    if (form != canonical_form(graph)) {
      throw Error(ErrorCode::FormatVersionMismatch, "stored form of orbit " + std::to_string(i) + " is stale");
    }
    auto row = j["adj"].get<std::vector<int>>();
    for (int w : row) {
      if (w < 0 || w >= count) throw Error(ErrorCode::FormatVersionMismatch, "adjacency index out of range");
    }
    any_adj = any_adj || !row.empty();
    adj.push_back(std::move(row));
    atlas.orbits.push_back({std::move(form), std::move(graph)});
  }
  if (std::getline(in, line) && !line.empty()) {
    throw Error(ErrorCode::FormatVersionMismatch, "trailing data after the declared orbits");
  }
  if (!std::is_sorted(atlas.orbits.begin(), atlas.orbits.end(),
                      [](const Orbit& a, const Orbit& b) { return a.form < b.form; })) {
    throw Error(ErrorCode::FormatVersionMismatch, "orbits are not in canonical order");
  }
  atlas.has_adjacency = any_adj;
  if (any_adj) atlas.adjacency = std::move(adj);
  return atlas;
}

void save_atlas(const OrbitAtlas& atlas, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IOError, "cannot write " + path.string());
  out << atlas_to_jsonl(atlas);
  if (!out) throw Error(ErrorCode::IOError, "short write to " + path.string());
}

OrbitAtlas load_atlas(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return atlas_from_jsonl(buf.str());
}

}  // namespace pants
