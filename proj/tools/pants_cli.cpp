// pants: orbit atlases, diameters, shift-path certificates and twist-word
// bounds for pants decomposition graphs.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pants/atlas.hpp"
#include "pants/bounds.hpp"
#include "pants/canonical.hpp"
#include "pants/dot.hpp"
#include "pants/error.hpp"
#include "pants/lickorish.hpp"
#include "pants/shift.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMissing = 3;

enum class Method { Constructive, Bfs };

struct RunConfig {
  int genus = 0;
  std::optional<fs::path> atlas_path;
  std::optional<fs::path> output_path;
  Method method = Method::Constructive;
  int threads = 1;
  bool json = false;
  bool no_build = false;
};

struct MissingPrerequisite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path default_atlas_path(int genus) {
  const char* dir = std::getenv("PANTS_ORBIT_CACHE_DIR");
  const fs::path base = dir && *dir ? fs::path(dir) : fs::path(".");
  return base / ("atlas_g" + std::to_string(genus) + ".jsonl");
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw pants::Error(pants::ErrorCode::IOError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (!cfg.output_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*cfg.output_path, std::ios::binary);
  if (!out || !(out << text)) {
    throw pants::Error(pants::ErrorCode::IOError, "cannot write " + cfg.output_path->string());
  }
}

pants::TrivalentGraph load_graph(const std::string& file) {
  const std::string text = read_file(file);
  return pants::parse_graph(text);
}

// Loads the cached atlas, or builds (and caches) it unless --no-build.
pants::OrbitAtlas obtain_atlas(const RunConfig& cfg) {
  const fs::path path = cfg.atlas_path.value_or(default_atlas_path(cfg.genus));
  if (fs::exists(path)) {
    auto atlas = pants::load_atlas(path);
    if (cfg.genus != 0 && atlas.genus != cfg.genus) {
      throw pants::Error(pants::ErrorCode::BadGenus, "atlas " + path.string() + " is for genus " +
                                                         std::to_string(atlas.genus));
    }
    if (!atlas.has_adjacency) pants::build_orbit_graph(atlas, cfg.threads);
    return atlas;
  }
  if (cfg.no_build) throw MissingPrerequisite("atlas " + path.string() + " not found and --no-build given");
  auto atlas = pants::build_atlas(cfg.genus, {7, cfg.threads});
  std::error_code ec;
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path(), ec);
  pants::save_atlas(atlas, path);
  return atlas;
}

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

int cmd_enumerate(const RunConfig& cfg) {
  auto atlas = pants::build_atlas(cfg.genus, {7, cfg.threads});
  const fs::path path = cfg.output_path.value_or(cfg.atlas_path.value_or(default_atlas_path(cfg.genus)));
  std::error_code ec;
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path(), ec);
  pants::save_atlas(atlas, path);
  if (cfg.json) {
    ordered_json j{{"genus", cfg.genus}, {"orbits", atlas.size()}, {"atlas", path.string()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "orbits: " << atlas.size() << "\n";
  }
  return kExitOk;
}

int cmd_diameter(const RunConfig& cfg) {
  const auto atlas = obtain_atlas(cfg);
  const int d = pants::diameter(atlas, cfg.threads);
  const double bound = pants::diameter_bound(atlas.genus);
  const bool pass = d <= bound;
  if (cfg.json) {
    ordered_json j{{"genus", atlas.genus}, {"orbits", atlas.size()}, {"diameter", d},
                   {"bound", bound},       {"pass", pass}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "diameter " << d << ", bound " << fixed3(bound) << ", " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitBoundViolation;
}

// Concrete moves following an orbit-graph shortest path.
pants::ShiftPath realise_orbit_path(const pants::OrbitAtlas& atlas, const pants::TrivalentGraph& from,
                                    const std::vector<int>& orbit_path) {
  pants::ShiftPath path{from, {}};
  pants::TrivalentGraph cur = from;
  for (std::size_t i = 1; i < orbit_path.size(); ++i) {
    const auto& want = atlas.orbits[static_cast<std::size_t>(orbit_path[i])].form;
    bool found = false;
    for (const auto& m : pants::enumerate_shifts(cur)) {
      auto next = pants::apply_shift(cur, m);
      if (pants::canonical_form(next) == want) {
        path.moves.push_back(m);
        cur = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw pants::Error(pants::ErrorCode::UnknownForm, "orbit path step has no realising shift");
  }
  return path;
}

int cmd_path(RunConfig cfg, const std::string& from_file, const std::string& to_file) {
  const auto a = load_graph(from_file);
  const auto b = load_graph(to_file);
  if (a.genus() != b.genus()) {
    throw pants::Error(pants::ErrorCode::BadGenus, "graphs have genus " + std::to_string(a.genus()) + " and " +
                                                       std::to_string(b.genus()));
  }
  if (cfg.genus != 0 && cfg.genus != a.genus()) {
    throw pants::Error(pants::ErrorCode::BadGenus, "--genus does not match the graphs");
  }
  cfg.genus = a.genus();

  if (cfg.method == Method::Bfs) {
    const auto atlas = obtain_atlas(cfg);
    const int ia = atlas.require_index(pants::canonical_form(a));
    const int ib = atlas.require_index(pants::canonical_form(b));
    const auto path = realise_orbit_path(atlas, a, pants::orbit_path(atlas, ia, ib));
    ordered_json j{{"method", "bfs"}, {"distance", path.length()}, {"path", pants::path_to_json(path)}};
    if (cfg.json) {
      write_output(cfg, j.dump() + "\n");
    } else {
      write_output(cfg, "distance " + std::to_string(path.length()) + "\n" + j["path"]["moves"].dump() + "\n");
    }
    return kExitOk;
  }

  pants::BoundCertificate cert = pants::path_between(a, b);
  if (pants::is_isomorphic(a, b)) cert = {pants::ShiftPath{a, {}}, cert.claimed_bound, {}, a};
  const std::string problem = pants::certificate_problem(cert);
  const bool pass = problem.empty();
  if (cfg.json) {
    auto j = pants::certificate_to_json(cert);
    write_output(cfg, j.dump() + "\n");
  } else {
    std::string text = "length " + std::to_string(cert.path.length()) + ", bound " +
                       fixed3(cert.claimed_bound) + ", " + (pass ? "PASS" : "FAIL: " + problem) + "\n";
    text += pants::certificate_to_json(cert).dump() + "\n";
    write_output(cfg, text);
  }
  return pass ? kExitOk : kExitBoundViolation;
}

int cmd_bound(const RunConfig& cfg, const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& t : tokens) text += t + " ";
  const auto word = pants::parse_word(cfg.genus, text);
  const double bound = pants::distance_bound(word);
  if (cfg.json) {
    ordered_json j{{"genus", cfg.genus},
                   {"word", pants::format_word(word)},
                   {"word_path_length", pants::word_path_length(word)},
                   {"diameter_bound", pants::diameter_bound(cfg.genus)},
                   {"distance_bound", bound},
                   {"note", "valid if input word is minimal"}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "distance bound " << fixed3(bound) << " (valid if input word is minimal)\n";
  }
  return kExitOk;
}

int cmd_dot(const RunConfig& cfg, const std::optional<std::string>& graph_file) {
  if (graph_file) {
    write_output(cfg, pants::graph_to_dot(load_graph(*graph_file)));
    return kExitOk;
  }
  if (!cfg.atlas_path && cfg.genus == 0) {
    throw pants::Error(pants::ErrorCode::BadParameters, "dot needs a graph file, --atlas or --genus");
  }
  RunConfig c = cfg;
  if (c.atlas_path && c.genus == 0) {
    auto atlas = pants::load_atlas(*c.atlas_path);
    if (!atlas.has_adjacency) pants::build_orbit_graph(atlas, c.threads);
    write_output(cfg, pants::atlas_to_dot(atlas));
    return kExitOk;
  }
  write_output(cfg, pants::atlas_to_dot(obtain_atlas(c)));
  return kExitOk;
}

int exit_code_for(pants::ErrorCode code) {
  switch (code) {
    case pants::ErrorCode::IOError:
    case pants::ErrorCode::FormatVersionMismatch:
      return kExitMissing;
    case pants::ErrorCode::LiftInvariantViolation:
    case pants::ErrorCode::BoundViolation:
    case pants::ErrorCode::WrongLoopCount:
      return kExitBoundViolation;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pants decomposition graphs: orbit atlases, diameters and shift-path certificates"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string method = "constructive";
  std::string atlas_path, output_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--atlas", atlas_path, "Atlas cache file");
    sub->add_option("--output", output_path, "Output file");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "Machine-readable output");
  };

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate orbits and write the atlas cache");
  enumerate->add_option("--genus", cfg.genus, "Genus")->required();
  add_common(enumerate);

  auto* diam = app.add_subcommand("diameter", "Orbit graph diameter against the diameter bound");
  diam->add_option("--genus", cfg.genus, "Genus")->required();
  diam->add_flag("--no-build", cfg.no_build, "Fail instead of building a missing atlas");
  add_common(diam);

  std::string from_file, to_file;
  auto* path = app.add_subcommand("path", "Shift path between two graphs");
  path->add_option("from", from_file, "Start graph JSON")->required();
  path->add_option("to", to_file, "Target graph JSON")->required();
  path->add_option("--genus", cfg.genus, "Genus (checked against the graphs)");
  path->add_option("--method", method, "constructive or bfs")
      ->check(CLI::IsMember({"constructive", "bfs"}));
  path->add_flag("--no-build", cfg.no_build, "Fail instead of building a missing atlas");
  add_common(path);

  std::vector<std::string> word;
  auto* bound = app.add_subcommand("bound", "Distance bound for a twist word");
  bound->add_option("--genus", cfg.genus, "Genus")->required();
  bound->add_option("word", word, "Tokens T<i> or T<i>^-1");
  bound->add_flag("--json", cfg.json, "Machine-readable output");

  std::string graph_file;
  auto* dot = app.add_subcommand("dot", "DOT export of a graph file or an atlas");
  dot->add_option("graph", graph_file, "Graph JSON");
  dot->add_option("--genus", cfg.genus, "Genus of the atlas to export");
  dot->add_flag("--no-build", cfg.no_build, "Fail instead of building a missing atlas");
  add_common(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (!atlas_path.empty()) cfg.atlas_path = atlas_path;
  if (!output_path.empty()) cfg.output_path = output_path;
  cfg.method = method == "bfs" ? Method::Bfs : Method::Constructive;

  try {
    if (*enumerate) return cmd_enumerate(cfg);
    if (*diam) return cmd_diameter(cfg);
    if (*path) return cmd_path(cfg, from_file, to_file);
    if (*bound) return cmd_bound(cfg, word);
    if (*dot) return cmd_dot(cfg, graph_file.empty() ? std::nullopt : std::optional(graph_file));
  } catch (const MissingPrerequisite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissing;
  } catch (const pants::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
