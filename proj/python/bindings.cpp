#include "groot/enumerate.hpp"
#include "groot/graph6.hpp"
#include "groot/isomorphism.hpp"
#include "groot/metrics.hpp"
#include "groot/mining.hpp"
#include "groot/oracle.hpp"
#include "groot/reconstruct.hpp"
#include "groot/root_isomorphism.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <cmath>

namespace py = pybind11;
using namespace groot;

namespace {

std::vector<Vertex> to_list(const VertexSet& s) { return members(s); }

VertexSet to_set(const Graph& g, const std::vector<Vertex>& vs) { return make_set(g.order(), vs); }

// Python sees girth as an int, or math.inf for forests.
py::object girth_value(const Girth& g) {
  if (g.is_infinite()) return py::float_(INFINITY);
  return py::int_(g.value());
}

Girth girth_bound(const py::object& bound) {
  if (bound.is_none()) return Girth::infinite();
  const double value = bound.cast<double>();
  if (std::isinf(value)) return Girth::infinite();
  return Girth::finite(std::max<std::size_t>(3, static_cast<std::size_t>(value)));
}

SearchConstraints constraints(std::size_t n, const py::object& girth_min, std::size_t min_degree,
                              bool connected) {
  return SearchConstraints{n, girth_bound(girth_min), min_degree, connected};
}

}  // namespace

PYBIND11_MODULE(_groot, m) {
  m.doc() = "Graph powers, girth, and square roots of girth at least six";

  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("order") = 0)
      .def(py::init([](std::size_t order, const std::vector<Edge>& edges) {
             return Graph::from_edges(order, edges);
           }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("relabeled", [](const Graph& g, const std::vector<Vertex>& image) { return g.relabeled(image); })
      .def("graph6", &emit_graph6)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Graph& g) { return py::hash(py::str(emit_graph6(g))); })
      .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

  py::enum_<ContradictionStage>(m, "ContradictionStage")
      .value("NeighborhoodClash", ContradictionStage::NeighborhoodClash)
      .value("EdgeOutsideSquare", ContradictionStage::EdgeOutsideSquare)
      .value("UnresolvedVertex", ContradictionStage::UnresolvedVertex)
      .value("SquareMismatch", ContradictionStage::SquareMismatch)
      .value("GirthViolation", ContradictionStage::GirthViolation)
      .value("DisconnectedInput", ContradictionStage::DisconnectedInput);

  py::class_<ReconstructionOutcome>(m, "ReconstructionOutcome")
      .def_property_readonly("has_root", &ReconstructionOutcome::has_root)
      .def_property_readonly("root", [](const ReconstructionOutcome& o) -> py::object {
        return o.has_root() ? py::cast(o.root()) : py::none();
      })
      .def_property_readonly("stage", [](const ReconstructionOutcome& o) -> py::object {
        return o.has_root() ? py::none() : py::cast(o.contradiction().stage);
      })
      .def_property_readonly("detail", [](const ReconstructionOutcome& o) {
        return o.has_root() ? std::string() : o.contradiction().detail;
      });

  py::class_<EqualRoots>(m, "EqualRoots").def("__repr__", [](const EqualRoots&) { return "EqualRoots()"; });
  py::class_<Involution>(m, "Involution")
      .def_property_readonly("map", [](const Involution& f) { return f.map.image(); })
      .def_readonly("verified", &Involution::verified)
      .def("cycles", [](const Involution& f) { return f.map.cycle_notation(); })
      .def("__repr__", [](const Involution& f) { return "Involution(" + f.map.cycle_notation() + ")"; });

  py::class_<SameSquarePair>(m, "SameSquarePair")
      .def_readonly("first", &SameSquarePair::first)
      .def_readonly("second", &SameSquarePair::second)
      .def_readonly("square", &SameSquarePair::square)
      .def_property_readonly("square_witness", [](const SameSquarePair& p) { return p.square_witness.image(); })
      .def_property_readonly("evidence", [](const SameSquarePair& p) {
        return p.evidence == NonIsomorphismEvidence::DegreeSequence ? "degree-sequence" : "exhaustive-search";
      })
      .def_property_readonly("girths", [](const SameSquarePair& p) {
        return py::make_tuple(girth_value(p.first_girth), girth_value(p.second_girth));
      });

  // graph-core
  m.def("closed_neighborhood", [](const Graph& g, Vertex v) { return to_list(closed_neighborhood(g, v)); });
  m.def("distance", &distance);
  m.def("power", &power, py::arg("h"), py::arg("r"));
  m.def("girth", [](const Graph& g) { return girth_value(girth(g)); });
  m.def("is_connected", &is_connected);
  m.def("is_maximal_clique", [](const Graph& g, const std::vector<Vertex>& s) {
    return is_maximal_clique(g, to_set(g, s));
  });
  m.def("are_isomorphic", [](const Graph& a, const Graph& b) -> std::optional<std::vector<Vertex>> {
    if (auto w = are_isomorphic(a, b)) return w->image();
    return std::nullopt;
  });
  m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); });
  m.def("emit_graph6", &emit_graph6);

  // root-reconstruct
  m.def("obs_star_holds", &obs_star_holds);
  m.def("obs_doublestar_holds", &obs_doublestar_holds);
  m.def("neighborhood_from_path", [](const Graph& g, Vertex x, Vertex y, Vertex z) {
    return to_list(neighborhood_from_path(g, x, y, z));
  });
  m.def("neighborhood_from_leaf", [](const Graph& g, Vertex y) { return to_list(neighborhood_from_leaf(g, y)); });
  m.def("reconstruct_from_seed", [](const Graph& g, Vertex u, Vertex v, Vertex w) {
    return reconstruct_from_seed(g, SeedPath(u, v, w));
  }, py::arg("g"), py::arg("u"), py::arg("v"), py::arg("w"));
  m.def("enumerate_roots", &enumerate_roots, py::arg("g"), py::arg("girth_min") = 6);

  // root-isomorphism
  m.def("common_edge_map", [](const Graph& h1, const Graph& h2) {
    const CommonEdgeMap x(h1, h2);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < x.order(); ++v) out.push_back(x.at(v));
    return out;
  });
  m.def("shared_path", [](const Graph& h1, const Graph& h2) -> std::optional<std::tuple<Vertex, Vertex, Vertex>> {
    if (auto p = shared_path(h1, h2)) return std::make_tuple(p->u, p->v, p->w);
    return std::nullopt;
  });
  m.def("check_property_A", &check_property_A);
  m.def("check_property_B", &check_property_B);
  m.def("build_isomorphism", &build_isomorphism);

  // oracle-search
  m.def("brute_force_roots", [](const Graph& g, std::size_t girth_min, std::size_t max_order) {
    return brute_force_roots(g, girth_min, BruteForceOptions{max_order});
  }, py::arg("g"), py::arg("girth_min"), py::arg("max_order") = 10);
  m.def("enumerate_graphs", [](std::size_t n, const py::object& girth_min, std::size_t min_degree, bool connected) {
    return enumerate_graphs(constraints(n, girth_min, min_degree, connected));
  }, py::arg("n"), py::arg("girth_min") = 3, py::arg("min_degree") = 0, py::arg("connected") = true);
  m.def("find_same_square_pairs", [](std::size_t n, const py::object& girth_min, std::size_t min_degree, bool connected) {
    return find_same_square_pairs(constraints(n, girth_min, min_degree, connected));
  }, py::arg("n"), py::arg("girth_min") = 3, py::arg("min_degree") = 0, py::arg("connected") = true);
  m.def("complete_power_tree_pairs", [](std::size_t r, std::size_t n) {
    std::vector<std::pair<Graph, Graph>> out;
    for (auto& p : complete_power_tree_pairs(r, n)) out.emplace_back(p.first, p.second);
    return out;
  }, py::arg("r"), py::arg("n"));
}
