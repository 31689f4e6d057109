#ifndef PANTS_ATLAS_HPP
#define PANTS_ATLAS_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pants/canonical.hpp"
#include "pants/trivalent_graph.hpp"

namespace pants {

struct Orbit {
  CanonicalForm form;
  TrivalentGraph representative;
};

struct AtlasOptions {
  int max_genus = 7;
  int threads = 1;
};

/// All isomorphism classes of genus-g pants decomposition graphs, sorted by
/// canonical form, with the orbit-graph adjacency once built.
struct OrbitAtlas {
  int genus = 0;
  std::vector<Orbit> orbits;
  std::vector<std::vector<int>> adjacency;
  bool has_adjacency = false;
  /// In-memory only; the cache file stays byte-reproducible.
  std::chrono::system_clock::time_point built_at{};

  std::size_t size() const noexcept { return orbits.size(); }
  std::optional<int> index_of(const CanonicalForm& f) const;
  int require_index(const CanonicalForm& f) const;
};

/// Orbits by recursive augmentation from genus 2: every connected cubic
/// multigraph on n + 2 vertices arises from one on n vertices by joining two
/// subdivision points with a new edge, or by hanging a loop vertex off one
/// subdivision point. Duplicates are rejected by canonical form.
OrbitAtlas enumerate_orbits(int genus, const AtlasOptions& options = {});

/// Independent enumerator: backtracking over the half-edge pairing model
/// (each stub joins the first free stub of a vertex, untouched vertices are
/// introduced in index order), deduplicated by canonical form. Exponential;
/// throws SearchBudgetExceeded after `node_budget` search nodes.
std::vector<Orbit> enumerate_orbits_pairing_model(int genus,
                                                  std::uint64_t node_budget = 2'000'000'000ULL);

/// Fills adjacency from shift neighbours. UnknownForm if a neighbour is not in
/// the atlas.
void build_orbit_graph(OrbitAtlas& atlas, int threads = 1);
OrbitAtlas build_atlas(int genus, const AtlasOptions& options = {});

/// BFS distances from a set of sources; -1 marks unreachable orbits.
std::vector<int> bfs_distances(const OrbitAtlas& atlas, std::span<const int> sources);
int bfs_distance(const OrbitAtlas& atlas, const CanonicalForm& a, const CanonicalForm& b);
/// Orbit indices of one shortest path a -> b (inclusive).
std::vector<int> orbit_path(const OrbitAtlas& atlas, int from, int to);
int diameter(const OrbitAtlas& atlas, int threads = 1);
bool is_connected(const OrbitAtlas& atlas);

/// JSON lines: {"format":1,"genus":g,"orbits":n} then one
/// {"form":hex,"graph":{...},"adj":[...]} per orbit.
std::string atlas_to_jsonl(const OrbitAtlas& atlas);
OrbitAtlas atlas_from_jsonl(std::string_view text);
void save_atlas(const OrbitAtlas& atlas, const std::filesystem::path& path);
OrbitAtlas load_atlas(const std::filesystem::path& path);

}  // namespace pants

#endif  // PANTS_ATLAS_HPP
