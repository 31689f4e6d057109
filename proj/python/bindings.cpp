#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pants/atlas.hpp"
#include "pants/bounds.hpp"
#include "pants/cages.hpp"
#include "pants/canonical.hpp"
#include "pants/dot.hpp"
#include "pants/error.hpp"
#include "pants/lickorish.hpp"
#include "pants/shift.hpp"

namespace py = pybind11;
using namespace pants;

namespace {

std::string certificate_json(const BoundCertificate& c) { return certificate_to_json(c).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pants decomposition graphs: shift moves, orbit atlases and path certificates";

  static py::exception<Error> error(m, "PantsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<TrivalentGraph>(m, "Graph")
      .def(py::init([](int n, const EdgeList& edges) { return TrivalentGraph::from_edge_list(n, edges); }),
           py::arg("vertices"), py::arg("edges"))
      .def_static("from_json", [](const std::string& s) { return parse_graph(s); })
      .def("to_json", [](const TrivalentGraph& g) { return serialize(g); })
      .def_property_readonly("vertex_count", &TrivalentGraph::vertex_count)
      .def_property_readonly("genus", &TrivalentGraph::genus)
      .def_property_readonly("edges", &TrivalentGraph::edge_list)
      .def("loop_count", [](const TrivalentGraph& g) { return loop_count(g); })
      .def("girth", [](const TrivalentGraph& g) { return girth(g).length; })
      .def("canonical_form", [](const TrivalentGraph& g) { return canonical_form(g).hex(); })
      .def("shifts", [](const TrivalentGraph& g) {
        std::vector<std::pair<EdgeId, int>> out;
        for (const auto& s : enumerate_shifts(g)) out.emplace_back(s.edge, s.pairing);
        return out;
      })
      .def("apply_shift", [](const TrivalentGraph& g, EdgeId edge, int pairing) {
        return apply_shift(g, {edge, pairing});
      })
      .def("to_dot", [](const TrivalentGraph& g) { return graph_to_dot(g); })
      .def("__repr__", [](const TrivalentGraph& g) { return "Graph(" + serialize(g) + ")"; });

  m.def("oloops", &make_oloops, py::arg("genus"));
  m.def("is_isomorphic", &is_isomorphic);
  m.def("orbit_representatives", [](int genus) {
    std::vector<TrivalentGraph> out;
    for (auto& o : enumerate_orbits(genus).orbits) out.push_back(std::move(o.representative));
    return out;
  }, py::arg("genus"));
  m.def("orbit_count", [](int genus) { return enumerate_orbits(genus).size(); }, py::arg("genus"));
  m.def("diameter", [](int genus, int threads) {
    py::gil_scoped_release release;
    return diameter(build_atlas(genus, {7, threads}), threads);
  }, py::arg("genus"), py::arg("threads") = 1);
  m.def("atlas_jsonl", [](int genus) { return atlas_to_jsonl(build_atlas(genus)); }, py::arg("genus"));

  m.def("diameter_bound", &diameter_bound, py::arg("genus"));
  m.def("pull_loops_bound", &pull_loops_bound, py::arg("genus"));
  m.def("girth_upper_bound", &girth_upper_bound, py::arg("genus"));
  m.def("cage_lower_bound", [](int k, int girth) { return cage_lower_bound(k, girth).lower_bound; });

  m.def("pull_all_loops", [](const TrivalentGraph& g) { return certificate_json(pull_all_loops(g, g.genus())); });
  m.def("path_to_oloops", [](const TrivalentGraph& g) { return certificate_json(path_to_oloops(g, g.genus())); });
  m.def("path_between", [](const TrivalentGraph& a, const TrivalentGraph& b) {
    return certificate_json(path_between(a, b));
  });

  m.def("generator_weight", &generator_weight, py::arg("genus"), py::arg("index"));
  m.def("distance_bound", [](int genus, const std::string& word) { return distance_bound(parse_word(genus, word)); },
        py::arg("genus"), py::arg("word"));
}
