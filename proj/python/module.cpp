#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robustgraph/geometry.hpp"
#include "robustgraph/oracle.hpp"
#include "robustgraph/tg_robust.hpp"
#include "robustgraph/udg_robust.hpp"

namespace py = pybind11;
using namespace robustgraph;

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

// Outcomes become dicts with the same keys as the CLI's JSON records.

py::dict rejection(const NotInDomain& r) {
  py::dict d;
  d["outcome"] = "NotInDomain";
  d["reason"] = std::string(to_string(r.reason));
  d["witness"] = r.witness;
  if (r.planarity != PlanarityFailure::None) d["planarity"] = std::string(to_string(r.planarity));
  return d;
}

py::dict tagged(const char* outcome) {
  py::dict d;
  d["outcome"] = outcome;
  return d;
}

py::dict to_dict(const TriangleOutcome& out) {
  return std::visit(Overloaded{
                        [](const Triangle& t) {
                          auto d = tagged("Triangle");
                          d["witness"] = std::vector<Vertex>{t.a, t.b, t.c};
                          return d;
                        },
                        [](const TriangleFree&) { return tagged("TriangleFree"); },
                        [](const NotInDomain& r) { return rejection(r); },
                    },
                    out);
}

py::dict to_dict(const GirthOutcome& out) {
  return std::visit(Overloaded{
                        [](const Girth& g) {
                          auto d = tagged("Girth");
                          d["girth"] = g.length;
                          d["witness"] = g.cycle;
                          return d;
                        },
                        [](const NoCycle&) { return tagged("NoCycle"); },
                        [](const NotInDomain& r) { return rejection(r); },
                    },
                    out);
}

py::dict to_dict(const DirectedTriangleOutcome& out) {
  return std::visit(Overloaded{
                        [](const DirectedTriangle& t) {
                          auto d = tagged("Triangle");
                          d["witness"] = std::vector<Vertex>{t.v, t.u, t.w};
                          return d;
                        },
                        [](const TriangleFree&) { return tagged("TriangleFree"); },
                        [](const NotInDomain& r) { return rejection(r); },
                    },
                    out);
}

SiteSet to_sites(const std::vector<std::tuple<double, double, double>>& xyr) {
  std::vector<Site> sites;
  sites.reserve(xyr.size());
  for (const auto& [x, y, r] : xyr) sites.push_back({x, y, r});
  return SiteSet(std::move(sites));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Robust triangle and girth algorithms for unit disk and transmission graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<NonUnitRadiusError>(m, "NonUnitRadiusError", PyExc_ValueError);

  py::class_<UndirectedGraph>(m, "UndirectedGraph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return build_undirected(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &UndirectedGraph::num_vertices)
      .def_property_readonly("num_edges", &UndirectedGraph::num_edges)
      .def("degree", &UndirectedGraph::degree)
      .def("neighbors",
           [](const UndirectedGraph& g, Vertex v) {
             if (v >= g.num_vertices()) throw VertexOutOfRangeError(v, g.num_vertices());
             const auto s = g.neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("edges", &UndirectedGraph::edges)
      .def("__repr__", [](const UndirectedGraph& g) {
        return "<UndirectedGraph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) +
               ">";
      });

  py::class_<DirectedGraph>(m, "DirectedGraph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return build_directed(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &DirectedGraph::num_vertices)
      .def_property_readonly("num_edges", &DirectedGraph::num_edges)
      .def("successors",
           [](const DirectedGraph& d, Vertex v) {
             if (v >= d.num_vertices()) throw VertexOutOfRangeError(v, d.num_vertices());
             const auto s = d.successors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("edges", &DirectedGraph::edges)
      .def("__repr__", [](const DirectedGraph& d) {
        return "<DirectedGraph n=" + std::to_string(d.num_vertices()) + " m=" + std::to_string(d.num_edges()) +
               ">";
      });

  m.def(
      "random_sites",
      [](std::size_t n, double box, double rmin, double rmax, std::uint64_t seed) {
        std::vector<std::tuple<double, double, double>> out;
        for (const Site& s : random_sites(n, box, {rmin, rmax}, seed)) out.emplace_back(s.x, s.y, s.r);
        return out;
      },
      py::arg("n"), py::arg("box"), py::arg("rmin") = 1.0, py::arg("rmax") = 1.0, py::arg("seed") = 0,
      "Deterministic sites as (x, y, r) tuples.");
  m.def(
      "unit_disk_graph", [](const std::vector<std::tuple<double, double, double>>& s) {
        return unit_disk_graph(to_sites(s));
      },
      py::arg("sites"));
  m.def(
      "transmission_graph", [](const std::vector<std::tuple<double, double, double>>& s) {
        return transmission_graph(to_sites(s));
      },
      py::arg("sites"));

  m.def("star_graph", &star_graph, py::arg("k"));
  m.def("petersen_graph", &petersen_graph);
  m.def("directed_cycle", &directed_cycle, py::arg("k"));
  m.def("bidirected_star", &bidirected_star, py::arg("k"));

  m.def(
      "find_triangle_udg",
      [](const UndirectedGraph& g) {
        TriangleCounters c;
        py::dict d = to_dict(find_triangle_udg(g, &c));
        py::dict counters;
        counters["pair_tests"] = c.pair_tests;
        counters["entries_scanned"] = c.entries_scanned;
        counters["max_pair_tests_per_vertex"] = c.max_pair_tests_per_vertex;
        counters["high_degree_branch"] = c.high_degree_branch;
        d["counters"] = counters;
        return d;
      },
      py::arg("graph"));
  m.def(
      "girth_udg", [](const UndirectedGraph& g) { return to_dict(girth_udg(g)); }, py::arg("graph"));
  m.def(
      "find_directed_triangle",
      [](const DirectedGraph& dg) {
        DirectedTriangleCounters c;
        py::dict d = to_dict(find_directed_triangle(dg, &c));
        py::dict counters;
        counters["intersections"] = c.intersections;
        counters["entries_scanned"] = c.entries_scanned;
        counters["max_list_traversals"] = c.max_list_traversals;
        counters["high_bidegree_branch"] = c.high_bidegree_branch;
        d["counters"] = counters;
        return d;
      },
      py::arg("graph"));
  m.def("is_planar", &planarity, py::arg("graph"), py::arg("triangle_free") = false,
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "brute_triangle",
      [](const UndirectedGraph& g) -> std::optional<std::tuple<Vertex, Vertex, Vertex>> {
        if (const auto t = oracle::brute_triangle(g)) return std::make_tuple(t->a, t->b, t->c);
        return std::nullopt;
      },
      py::arg("graph"));
  m.def("brute_girth", &oracle::brute_girth, py::arg("graph"));
  m.def(
      "brute_directed_triangle",
      [](const DirectedGraph& d) -> std::optional<std::tuple<Vertex, Vertex, Vertex>> {
        if (const auto t = oracle::brute_directed_triangle(d)) return std::make_tuple(t->v, t->u, t->w);
        return std::nullopt;
      },
      py::arg("graph"));
}
