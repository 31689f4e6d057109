#ifndef PANTS_DOT_HPP
#define PANTS_DOT_HPP

#include <string>

#include "pants/atlas.hpp"
#include "pants/trivalent_graph.hpp"

namespace pants {

/// Graphviz multigraph, one line per edge slot; loops and parallel edges kept.
std::string graph_to_dot(const TrivalentGraph& g, const std::string& name = "G");

/// One node per orbit labelled by its loop count; one edge per adjacent pair.
std::string atlas_to_dot(const OrbitAtlas& atlas);

}  // namespace pants

#endif  // PANTS_DOT_HPP
