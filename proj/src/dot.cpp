#include "pants/dot.hpp"

#include <sstream>

namespace pants {

std::string graph_to_dot(const TrivalentGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [u, v] = g.endpoints(k);
    out << "  " << u << " -- " << v << " [label=\"e" << g.id_at(k) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string atlas_to_dot(const OrbitAtlas& atlas) {
  std::ostringstream out;
  out << "graph orbits_g" << atlas.genus << " {\n";
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    out << "  o" << i << " [label=\"" << i << " (" << loop_count(atlas.orbits[i].representative)
        << " loops)\"];\n";
  }
  if (atlas.has_adjacency) {
    for (std::size_t i = 0; i < atlas.size(); ++i) {
      for (int j : atlas.adjacency[i]) {
        if (static_cast<std::size_t>(j) > i) out << "  o" << i << " -- o" << j << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pants
