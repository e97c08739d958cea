#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "fairtile/cluster.hpp"
#include "fairtile/hexsplit.hpp"
#include "fairtile/patch.hpp"
#include "fairtile/tiling_io.hpp"
#include "fairtile/verify.hpp"

namespace py = pybind11;

namespace {

using fairtile::ConvexPolygon;
using fairtile::Point;
using fairtile::SideFigure;
using fairtile::Tiling;
using VertexList = std::vector<std::pair<double, double>>;

ConvexPolygon to_polygon(const VertexList& vertices) {
  std::vector<Point> points;
  points.reserve(vertices.size());
  for (const auto& [x, y] : vertices) points.push_back({x, y});
  return ConvexPolygon(std::move(points));
}

VertexList from_polygon(const ConvexPolygon& poly) {
  VertexList out;
  out.reserve(static_cast<std::size_t>(poly.size()));
  for (const Point& p : poly.vertices()) out.emplace_back(p.x, p.y);
  return out;
}

SideFigure to_figure(const std::tuple<double, double, double>& f) {
  return {std::get<0>(f), std::get<1>(f), std::get<2>(f)};
}

py::dict report_to_dict(const fairtile::VerifyReport& r) {
  py::dict d;
  d["pass"] = r.pass;
  d["max_area_dev"] = r.max_area_dev;
  d["max_perimeter_dev"] = r.max_perimeter_dev;
  d["min_congruence_distance"] = r.min_congruence_distance;
  d["min_congruence_pair"] = py::make_tuple(r.min_congruence_pair.first, r.min_congruence_pair.second);
  d["min_side_figure_distance"] = r.min_side_figure_distance;
  d["max_angle_dev"] = r.max_angle_dev;
  d["max_closeness"] = r.max_closeness;
  d["overlap_found"] = r.overlap_found;
  d["total_area_relative_error"] = r.total_area_relative_error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fair pentagon tilings: planar geometry kernel, hexagon splitting, patch "
            "generation and verification";

  m.attr("PENTAGON_AREA") = fairtile::kPentagonArea;
  m.attr("PENTAGON_PERIMETER") = fairtile::kPentagonPerimeter;
  m.attr("HEXAGON_AREA") = fairtile::kHexagonArea;

  m.def(
      "signed_area", [](const VertexList& v) { return fairtile::signed_area(to_polygon(v)); },
      py::arg("vertices"), "Signed area of a counterclockwise convex polygon.");
  m.def(
      "perimeter", [](const VertexList& v) { return fairtile::perimeter(to_polygon(v)); },
      py::arg("vertices"));
  m.def(
      "interior_angles", [](const VertexList& v) { return fairtile::interior_angles(to_polygon(v)); },
      py::arg("vertices"));
  m.def(
      "side_figure",
      [](const VertexList& v, int side) {
        const SideFigure f = fairtile::side_figure(to_polygon(v), side);
        return py::make_tuple(f.length, f.angle_left, f.angle_right);
      },
      py::arg("vertices"), py::arg("side"),
      "Side length plus the interior angles at its endpoints.");
  m.def(
      "side_figure_distance",
      [](const std::tuple<double, double, double>& f, const std::tuple<double, double, double>& g) {
        return fairtile::side_figure_distance(to_figure(f), to_figure(g));
      },
      py::arg("f"), py::arg("g"));
  m.def(
      "congruence_distance",
      [](const VertexList& p, const VertexList& q) {
        return fairtile::congruence_distance(to_polygon(p), to_polygon(q));
      },
      py::arg("p"), py::arg("q"),
      "Zero iff the polygons are congruent under a Euclidean isometry (reflections included).");
  m.def(
      "eps_closeness",
      [](const VertexList& p, const VertexList& q) {
        return fairtile::eps_closeness(to_polygon(p), to_polygon(q));
      },
      py::arg("p"), py::arg("q"));

  m.def("regular_hexagon", [] {
    const auto corners = fairtile::canonical_params().hexagon;
    VertexList out;
    for (const Point& p : corners) out.emplace_back(p.x, p.y);
    return out;
  });

  m.def(
      "split_hexagon",
      [](const VertexList& hexagon, double eps_max) {
        const fairtile::FairSplit split =
            fairtile::split_hexagon(to_polygon(hexagon), fairtile::SolverConfig{}, eps_max);
        py::dict d;
        py::list pentagons, areas, perimeters, angles;
        for (const ConvexPolygon& pentagon : split.pentagons) {
          pentagons.append(from_polygon(pentagon));
          areas.append(fairtile::signed_area(pentagon));
          perimeters.append(fairtile::perimeter(pentagon));
          angles.append(fairtile::interior_angles(pentagon));
        }
        d["pentagons"] = pentagons;
        d["areas"] = areas;
        d["perimeters"] = perimeters;
        d["angles"] = angles;
        d["marked_side"] = fairtile::kMarkedPentagonSide;
        d["residual_norm"] = split.report.residual_norm;
        d["iterations"] = split.report.iterations;
        d["max_angle_deviation"] = split.max_angle_deviation;
        return d;
      },
      py::arg("hexagon"), py::arg("eps_max") = 0.05,
      "Split a near-regular hexagon into three fair pentagons.");

  m.def("jacobian_determinant", [] {
    return fairtile::determinant(fairtile::jacobian_ab(fairtile::canonical_params()));
  });
  m.def("jacobian_closed_form", [] {
    return (-162.0 + 486.0 * std::sqrt(2.0) + 81.0 * std::sqrt(3.0) - 270.0 * std::sqrt(6.0)) / 8.0;
  });

  py::class_<Tiling>(m, "Tiling")
      .def_property_readonly("pentagon_count",
                             [](const Tiling& t) { return t.pentagons.size(); })
      .def_property_readonly("cluster_count", [](const Tiling& t) { return t.cluster_count(); })
      .def_property_readonly("area_target", [](const Tiling& t) { return t.area_target; })
      .def_property_readonly("perimeter_target", [](const Tiling& t) { return t.perimeter_target; })
      .def("pentagon",
           [](const Tiling& t, std::size_t i) {
             const fairtile::PentagonRecord& r = t.pentagons.at(i);
             py::dict d;
             d["id"] = r.id;
             d["cluster"] = r.cluster_index;
             d["hexagon"] = r.hexagon_index;
             d["index"] = r.pentagon_index;
             d["marked_side"] = r.marked_side;
             d["vertices"] = from_polygon(r.polygon);
             return d;
           })
      .def("to_json", [](const Tiling& t) { return fairtile::serialize_tiling(t); })
      .def("save",
           [](const Tiling& t, const std::string& path) {
             fairtile::write_file(path, fairtile::serialize_tiling(t));
           })
      .def("save_svg", [](const Tiling& t, const std::string& path) {
        fairtile::write_file(path, fairtile::render_svg(t));
      });

  m.def("generate_patch",
        [](int rings, double epsilon0, double rho, std::uint64_t seed) {
          return fairtile::generate_patch(rings, epsilon0, rho, seed);
        },
        py::arg("rings") = 1, py::arg("epsilon0") = 5e-3, py::arg("rho") = 0.7, py::arg("seed") = 0);
  m.def("reference_patch", &fairtile::reference_patch, py::arg("rings"));
  m.def("parse_tiling", &fairtile::parse_tiling, py::arg("text"));
  m.def("load_tiling",
        [](const std::string& path) { return fairtile::parse_tiling(fairtile::read_file(path)); },
        py::arg("path"));

  m.def(
      "verify",
      [](const Tiling& t, const Tiling* reference, double tol_area, double tol_perimeter,
         double delta_sep, double mu_max, double eps_max) {
        fairtile::VerifyConfig cfg;
        cfg.tol_area = tol_area;
        cfg.tol_perimeter = tol_perimeter;
        cfg.delta_sep = delta_sep;
        cfg.mu_max = mu_max;
        cfg.eps_max = eps_max;
        return report_to_dict(fairtile::verify_all(t, reference, cfg));
      },
      py::arg("tiling"), py::arg("reference") = nullptr, py::arg("tol_area") = 1e-9,
      py::arg("tol_perimeter") = 1e-9, py::arg("delta_sep") = 1e-9, py::arg("mu_max") = 0.05,
      py::arg("eps_max") = 0.05, "Run all applicable checks; returns the report as a dict.");
}
