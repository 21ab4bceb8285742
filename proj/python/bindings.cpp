// Python module: thin wrappers over the core library. Edges cross the
// boundary as (a, b) tuples, vertex sets as lists of ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "mopiso/error.hpp"
#include "mopiso/families.hpp"
#include "mopiso/io.hpp"
#include "mopiso/isolation.hpp"
#include "mopiso/mop.hpp"
#include "mopiso/oracle.hpp"
#include "mopiso/polygon.hpp"
#include "mopiso/svg.hpp"

namespace py = pybind11;
using namespace mopiso;

namespace {

std::vector<Edge> edges_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
  return edges;
}

std::vector<std::pair<int, int>> pairs_from_edges(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.a, e.b);
  return pairs;
}

SimplePolygon polygon_from_pairs(
    const std::vector<std::pair<long long, long long>>& pts) {
  std::vector<Point> corners;
  corners.reserve(pts.size());
  for (const auto& [x, y] : pts) corners.push_back({x, y});
  return SimplePolygon(std::move(corners));
}

}  // namespace

PYBIND11_MODULE(_mopiso, m) {
  m.doc() = "Isolating sets, domination, and guard placement on maximal "
            "outerplanar graphs";

  static py::exception<Error> mop_error(m, "MopError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(mop_error, e.what());
    }
  });

  py::class_<Mop>(m, "Mop")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& diagonals) {
             return Mop(n, edges_from_pairs(diagonals));
           }),
           py::arg("n"), py::arg("diagonals"))
      .def_property_readonly("order", &Mop::order)
      .def_property_readonly(
          "diagonals", [](const Mop& g) { return pairs_from_edges(g.diagonals()); })
      .def("degree", &Mop::degree, py::arg("v"))
      .def("neighbors", &Mop::neighbors, py::arg("v"))
      .def("has_edge", &Mop::has_edge, py::arg("u"), py::arg("v"))
      .def("faces",
           [](const Mop& g) {
             std::vector<std::vector<int>> out;
             for (const auto& f : g.faces()) out.push_back({f[0], f[1], f[2]});
             return out;
           })
      .def("__repr__", [](const Mop& g) {
        return "Mop(n=" + std::to_string(g.order()) + ", diagonals=" +
               std::to_string(g.diagonals().size()) + ")";
      });

  m.def("degree2_vertices", &degree2_vertices, py::arg("g"));
  m.def("closed_neighborhood", &closed_neighborhood, py::arg("g"), py::arg("set"));
  m.def(
      "is_isolating",
      [](const Mop& g, const std::vector<int>& set, int k) {
        IsolationCheck c = is_isolating(g, set, k);
        return py::make_tuple(c.isolating, c.residual_max_degree);
      },
      py::arg("g"), py::arg("set"), py::arg("k"),
      "Returns (isolating, residual_max_degree).");
  m.def("is_dominating", &is_dominating, py::arg("g"), py::arg("set"));

  py::class_<BoundedSolution>(m, "BoundedSolution")
      .def_readonly("set", &BoundedSolution::set)
      .def_readonly("k", &BoundedSolution::k)
      .def_property_readonly(
          "algorithm",
          [](const BoundedSolution& s) { return std::string(bound_name_str(s.bound_name)); })
      .def_property_readonly("size", &BoundedSolution::size)
      .def_property_readonly(
          "bound", [](const BoundedSolution& s) { return s.bound_value.str(); })
      .def_property_readonly(
          "bound_floor",
          [](const BoundedSolution& s) { return s.bound_value.floor(); })
      .def_readonly("bound_applicable", &BoundedSolution::bound_applicable)
      .def_readonly("bound_respected", &BoundedSolution::bound_respected)
      .def("__repr__", [](const BoundedSolution& s) {
        return "BoundedSolution(size=" + std::to_string(s.size()) + ", bound=" +
               s.bound_value.str() + ")";
      });

  m.def("isolate_small", &isolate_small, py::arg("g"), py::arg("k"));
  m.def("isolate_order", &isolate_order, py::arg("g"), py::arg("k"));
  m.def("isolate_order_plus_n2", &isolate_order_plus_n2, py::arg("g"), py::arg("k"));
  m.def("isolate_order_minus_n2", &isolate_order_minus_n2, py::arg("g"), py::arg("k"));
  m.def("isolate_best", &isolate_best, py::arg("g"), py::arg("k"));
  m.def("dominate_third", &dominate_third, py::arg("g"));
  m.def("dominate_half_minus", &dominate_half_minus, py::arg("g"));

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("value", &ExactResult::value)
      .def_readonly("witness", &ExactResult::witness)
      .def_readonly("explored", &ExactResult::explored)
      .def("__repr__", [](const ExactResult& r) {
        return "ExactResult(value=" + std::to_string(r.value) + ")";
      });

  m.def("exact_isolation_number", &exact_isolation_number, py::arg("g"), py::arg("k"),
        py::arg("limit") = 24);
  m.def("exact_domination_number", &exact_domination_number, py::arg("g"),
        py::arg("limit") = 24);

  m.def("fan", &fan, py::arg("n"));
  m.def("family_T", &family_T, py::arg("k"), py::arg("t"));
  m.def("family_A", &family_A, py::arg("k"), py::arg("p"));
  m.def("family_H", &family_H, py::arg("k"), py::arg("t"));
  m.def("family_R", &family_R, py::arg("k"));
  m.def("family_S", &family_S, py::arg("k"), py::arg("t"));
  m.def("family_M", &family_M, py::arg("p"));
  m.def("random_mop", &random_mop, py::arg("n"), py::arg("seed"));

  py::class_<SimplePolygon>(m, "SimplePolygon")
      .def(py::init(&polygon_from_pairs), py::arg("corners"))
      .def_property_readonly("size", &SimplePolygon::size)
      .def_property_readonly("corners",
                             [](const SimplePolygon& p) {
                               std::vector<std::pair<long long, long long>> out;
                               for (const Point& c : p.corners())
                                 out.emplace_back(c.x, c.y);
                               return out;
                             })
      .def("__repr__", [](const SimplePolygon& p) {
        return "SimplePolygon(corners=" + std::to_string(p.size()) + ")";
      });

  m.def("spiral_gallery", &spiral_gallery, py::arg("t"), py::arg("k"));
  m.def("triangulate", &triangulate, py::arg("polygon"));
  m.def("reflex_chain_count", &reflex_chain_count, py::arg("polygon"));
  m.def(
      "verify_window_coverage",
      [](const Mop& g, const std::vector<int>& guards, int k) {
        auto [ok, first_bad] = verify_window_coverage(g, guards, k);
        return py::make_tuple(ok, first_bad);
      },
      py::arg("g"), py::arg("guards"), py::arg("k"),
      "Returns (all_covered, first_failing_window_or_-1).");

  py::class_<GuardCertificate>(m, "GuardCertificate")
      .def_readonly("guards", &GuardCertificate::guards)
      .def_readonly("k", &GuardCertificate::k)
      .def_readonly("windows", &GuardCertificate::windows)
      .def_readonly("base_size", &GuardCertificate::base_size)
      .def_readonly("augmentations", &GuardCertificate::augmentations)
      .def("__repr__", [](const GuardCertificate& c) {
        return "GuardCertificate(guards=" + std::to_string(c.guards.size()) +
               ", augmentations=" + std::to_string(c.augmentations) + ")";
      });

  m.def("place_guards", &place_guards, py::arg("polygon"), py::arg("k"));

  m.def("mop_to_json", &mop_to_json, py::arg("g"));
  m.def("mop_from_json", &mop_from_json, py::arg("text"));
  m.def(
      "render_svg",
      [](const Mop& g, const std::vector<int>& highlight) {
        return render_svg(g, highlight);
      },
      py::arg("g"), py::arg("highlight") = std::vector<int>{});
  m.def(
      "render_polygon_svg",
      [](const SimplePolygon& poly, bool with_triangulation,
         const std::vector<int>& highlight) {
        if (with_triangulation) {
          Mop tri = triangulate(poly);
          return render_svg(poly, &tri, highlight);
        }
        return render_svg(poly, nullptr, highlight);
      },
      py::arg("polygon"), py::arg("with_triangulation") = true,
      py::arg("highlight") = std::vector<int>{});
}
