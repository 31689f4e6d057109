// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "pants/atlas.hpp"
#include "pants/bounds.hpp"
#include "pants/cages.hpp"
#include "pants/canonical.hpp"
#include "pants/error.hpp"
#include "pants/lickorish.hpp"
#include "pants/shift.hpp"
#include "test_support.hpp"

namespace {

using namespace pants;

constexpr double kLogTolerance = 1e-9;
constexpr double kGenus2RuntimeSeconds = 1.0;
constexpr int kMoveTrials = 10'000;
constexpr int kRelabelsPerGraph = 100;
constexpr int kMaxGenus = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const OrbitAtlas& atlas_for(int genus) {
  static std::map<int, OrbitAtlas> cache;
  auto it = cache.find(genus);
  if (it == cache.end()) it = cache.emplace(genus, build_atlas(genus)).first;
  return it->second;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome genus_two_ground_truth() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto atlas = build_atlas(2);
  const int d = diameter(atlas);
  const double bound = diameter_bound(2);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = atlas.size() == 2 && d == 1 && std::abs(bound - 2.0) < kLogTolerance && d <= bound &&
                    secs < kGenus2RuntimeSeconds;
  return {pass, fmt("orbits %zu, diameter %d, bound %.3f, %.3fs", atlas.size(), d, bound, secs)};
}

Outcome diameter_within_bound() {
  Outcome out;
  for (int g = 2; g <= kMaxGenus; ++g) {
    const int d = diameter(atlas_for(g));
    const double b = diameter_bound(g);
    out.pass = out.pass && d <= b;
    out.detail += fmt("g%d %d<=%.3f ", g, d, b);
  }
  return out;
}

Outcome girth_bound() {
  Outcome out;
  for (int g = 2; g <= kMaxGenus; ++g) {
    const auto& atlas = atlas_for(g);
    const auto report = verify_girth_bound(atlas);
    int oracle_max = 0;
    int oracle_violations = 0;
    for (const auto& o : atlas.orbits) {
      const int gi = testing::brute_force_girth(o.representative);
      oracle_max = std::max(oracle_max, gi);
      if (gi > 2.0 * (1.0 + std::log2(g - 1.0))) ++oracle_violations;
    }
    out.pass = out.pass && report.ok() && oracle_violations == 0 && report.max_girth == oracle_max;
    out.detail += fmt("g%d max %d<=%.3f ", g, report.max_girth, report.bound);
  }
  return out;
}

Outcome cage_formulas() {
  Outcome out;
  const int expected[] = {4, 6, 10};
  for (int G = 3; G <= 5; ++G) {
    const auto lb = cage_lower_bound(3, G).lower_bound;
    const int found = min_cubic_order_with_girth(G);
    out.pass = out.pass && lb == static_cast<std::uint64_t>(expected[G - 3]) && found == expected[G - 3];
    out.detail += fmt("G=%d LB %llu search %d ", G, static_cast<unsigned long long>(lb), found);
  }
  return out;
}

Outcome loop_pulling_certificates() {
  Outcome out;
  for (int g = 2; g <= 6; ++g) {
    const auto& atlas = atlas_for(g);
    std::vector<int> sources;
    for (std::size_t i = 0; i < atlas.size(); ++i) {
      if (loop_count(atlas.orbits[i].representative) == g) sources.push_back(static_cast<int>(i));
    }
    const auto dist = bfs_distances(atlas, sources);
    std::size_t longest = 0;
    int bad = 0;
    for (std::size_t i = 0; i < atlas.size(); ++i) {
      const auto cert = pull_all_loops(atlas.orbits[i].representative, g);
      longest = std::max(longest, cert.path.length());
      const bool ok = certificate_problem(cert).empty() && loop_count(cert.end) == g &&
                      static_cast<double>(cert.path.length()) <= pull_loops_bound(g) &&
                      dist[i] >= 0 && static_cast<std::size_t>(dist[i]) <= cert.path.length();
      if (!ok) ++bad;
    }
    out.pass = out.pass && bad == 0;
    out.detail += fmt("g%d max %zu<=%.3f ", g, longest, pull_loops_bound(g));
  }
  return out;
}

Outcome flatten_bound_check() {
  Outcome out;
  for (int g = 2; g <= kMaxGenus; ++g) {
    const auto target = canonical_form(make_oloops(g));
    std::size_t longest = 0;
    int count = 0;
    for (const auto& o : atlas_for(g).orbits) {
      if (loop_count(o.representative) != g) continue;
      ++count;
      const auto cert = flatten_to_oloops(o.representative, g);
      longest = std::max(longest, cert.path.length());
      const bool ok = certificate_problem(cert).empty() && canonical_form(cert.end) == target &&
                      static_cast<int>(cert.path.length()) <= std::max(0, g - 5) &&
                      (g > 5 || canonical_form(o.representative) == target);
      out.pass = out.pass && ok;
    }
    out.detail += fmt("g%d %d loop orbits max %zu ", g, count, longest);
  }
  return out;
}

Outcome move_system() {
  Outcome out;
  std::mt19937_64 rng(20240901);
  int failures = 0;
  for (int g = 2; g <= 5; ++g) {
    const int n = 2 * g - 2;
    for (int t = 0; t < kMoveTrials; ++t) {
      const auto graph = testing::random_graph(n, rng);
      const auto moves = enumerate_shifts(graph);
      if (!moves.empty()) {
        const auto m = moves[rng() % moves.size()];
        const auto after = apply_shift(graph, m);
        const bool counts = after.vertex_count() == n && after.edge_count() == graph.edge_count() &&
                            testing::connected(n, after.edge_list());
        bool valence = true;
        for (Vertex v = 0; v < n; ++v) {
          int deg = 0;
          for (int k = 0; k < after.edge_count(); ++k) {
            auto [a, b] = after.endpoints(k);
            deg += (a == v) + (b == v);
          }
          valence = valence && deg == 3;
        }
        const auto back = apply_shift(after, inverse_shift(graph, m));
        if (!counts || !valence || !is_isomorphic(back, graph)) ++failures;
      }
      const auto gr = girth(graph);
      if (gr.length > 1) {
        const auto s = shorten_cycle(graph, gr.witness);
        if (s.cycle.length() + 1 != gr.witness.length() || !is_simple_cycle(s.graph, s.cycle)) ++failures;
      }
    }
  }
  out.pass = failures == 0;
  out.detail = fmt("%d trials per genus 2..5, %d failures", kMoveTrials, failures);
  return out;
}

Outcome canonical_soundness() {
  std::mt19937_64 rng(77);
  std::vector<TrivalentGraph> graphs;
  for (int g = 2; g <= 5; ++g) {
    for (const auto& o : atlas_for(g).orbits) graphs.push_back(o.representative);
    for (int i = 0; i < 40; ++i) graphs.push_back(testing::random_graph(2 * g - 2, rng));
  }
  std::vector<CanonicalForm> forms;
  std::vector<std::vector<int>> codes;
  for (const auto& g : graphs) {
    forms.push_back(canonical_form(g));
    codes.push_back(testing::brute_force_code(g));
  }
  int disagreements = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      if ((forms[i] == forms[j]) != (codes[i] == codes[j])) ++disagreements;
    }
  }
  int relabel_changes = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (int r = 0; r < kRelabelsPerGraph; ++r) {
      const auto h = relabel_vertices(graphs[i], testing::random_permutation(graphs[i].vertex_count(), rng));
      if (canonical_form(h) != forms[i]) ++relabel_changes;
    }
  }
  return {disagreements == 0 && relabel_changes == 0,
          fmt("%zu graphs, %d pair disagreements, %d relabel changes", graphs.size(), disagreements,
              relabel_changes)};
}

Outcome lickorish_accounting() {
  Outcome out;
  for (int g = 2; g <= 10; ++g) {
    std::vector<int> hits(static_cast<std::size_t>(3 * g), 0);
    auto mark = [&](int lo, int hi, int weight) {
      for (int i = lo; i <= hi; ++i) {
        ++hits[static_cast<std::size_t>(i)];
        if (generator_weight(g, i) != weight) out.pass = false;
      }
    };
    mark(1, g, 1);
    mark(g + 1, g + 1, 4);
    if (2 * g - 1 != g + 1) mark(2 * g - 1, 2 * g - 1, 4);
    mark(g + 2, 2 * g - 2, 6);
    mark(2 * g, 3 * g - 1, 0);
    for (int i = 1; i <= 3 * g - 1; ++i) out.pass = out.pass && hits[static_cast<std::size_t>(i)] == 1;
  }
  const double b3 = distance_bound(parse_word(3, "T1 T4^-1"));
  const double b2 = distance_bound(parse_word(2, ""));
  out.pass = out.pass && std::abs(b3 - 15.0) < kLogTolerance && std::abs(b2 - 2.0) < kLogTolerance;
  out.detail = fmt("table genus 2..10, T1 T4^-1 -> %.9f, empty -> %.9f", b3, b2);
  return out;
}

std::string pipeline_output(int threads) {
  std::string out;
  for (int g = 2; g <= kMaxGenus; ++g) {
    const auto atlas = build_atlas(g, {kMaxGenus, threads});
    out += atlas_to_jsonl(atlas);
    out += std::to_string(diameter(atlas, threads)) + "\n";
    if (g > 6) continue;
    for (const auto& o : atlas.orbits) out += certificate_to_json(path_to_oloops(o.representative, g)).dump() + "\n";
  }
  return out;
}

Outcome determinism() {
  const auto a = pipeline_output(1);
  const auto b = pipeline_output(2);
  return {a == b, fmt("%zu bytes, threads 1 vs 2 %s", a.size(), a == b ? "identical" : "differ")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"genus-2 ground truth", genus_two_ground_truth},
      {"diameter bound genus 2..7", diameter_within_bound},
      {"girth bound genus 2..7", girth_bound},
      {"cage formulas G=3..5", cage_formulas},
      {"loop-pulling certificates genus 2..6", loop_pulling_certificates},
      {"flatten bound genus 2..7", flatten_bound_check},
      {"move-system properties", move_system},
      {"canonical-form soundness", canonical_soundness},
      {"twist-word accounting", lickorish_accounting},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
