#include "fairtile/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fairtile {

VerifyReport verify_fairness(const Tiling& t, const VerifyConfig& cfg) {
  VerifyReport report;
  for (const PentagonRecord& record : t.pentagons) {
    report.max_area_dev =
        std::max(report.max_area_dev, std::abs(signed_area(record.polygon) - t.area_target));
    report.max_perimeter_dev =
        std::max(report.max_perimeter_dev, std::abs(perimeter(record.polygon) - t.perimeter_target));
  }
  report.pass = report.max_area_dev <= cfg.tol_area && report.max_perimeter_dev <= cfg.tol_perimeter;
  return report;
}

VerifyReport verify_incongruence(const Tiling& t, const VerifyConfig& cfg) {
  VerifyReport report;
  const std::size_t n = t.pentagons.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PentagonRecord& a = t.pentagons[i];
      const PentagonRecord& b = t.pentagons[j];
      // Sorted-feature gap bounds the distance from below; pairs that cannot
      // improve the current minimum skip the alignment scan.
      if (congruence_distance_lower_bound(a.polygon, b.polygon) >= report.min_congruence_distance)
        continue;
      const double d = congruence_distance(a.polygon, b.polygon);
      if (d < report.min_congruence_distance) {
        report.min_congruence_distance = d;
        report.min_congruence_pair = {a.id, b.id};
      }
    }
  }

  std::vector<SideFigure> figures(n);
  for (std::size_t i = 0; i < n; ++i)
    figures[i] = side_figure(t.pentagons[i].polygon, t.pentagons[i].marked_side);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = side_figure_distance(figures[i], figures[j]);
      if (d < report.min_side_figure_distance) {
        report.min_side_figure_distance = d;
        report.min_side_figure_pair = {t.pentagons[i].id, t.pentagons[j].id};
      }
    }

  report.pass = report.min_congruence_distance >= cfg.delta_sep &&
                report.min_side_figure_distance >= cfg.delta_sep;
  return report;
}

namespace {

struct Bounds {
  double min_x, min_y, max_x, max_y;
};

Bounds bounds_of(const ConvexPolygon& poly) {
  Bounds b{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
  for (const Point& p : poly.vertices()) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

bool boxes_apart(const Bounds& a, const Bounds& b, double band) {
  return a.max_x + band < b.min_x || b.max_x + band < a.min_x || a.max_y + band < b.min_y ||
         b.max_y + band < a.min_y;
}

}  // namespace

VerifyReport verify_geometry(const Tiling& t, const VerifyConfig& cfg) {
  VerifyReport report;
  const std::size_t n = t.pentagons.size();

  bool all_convex = true;
  double total_area = 0.0;
  for (const PentagonRecord& record : t.pentagons) {
    total_area += signed_area(record.polygon);
    const std::vector<double> angles = interior_angles(record.polygon);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      if (!(angles[i] > 0.0)) all_convex = false;
      report.max_angle_dev =
          std::max(report.max_angle_dev, std::abs(angles[i] - kPentagonAngles[i]));
    }
  }

  std::vector<Bounds> boxes;
  boxes.reserve(n);
  for (const PentagonRecord& record : t.pentagons) boxes.push_back(bounds_of(record.polygon));
  for (std::size_t i = 0; i < n && !report.overlap_found; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (boxes_apart(boxes[i], boxes[j], cfg.overlap_band)) continue;
      if (separation_gap(t.pentagons[i].polygon, t.pentagons[j].polygon) < -cfg.overlap_band) {
        report.overlap_found = true;
        report.overlap_pair = {t.pentagons[i].id, t.pentagons[j].id};
        break;
      }
    }

  const double expected_area = static_cast<double>(t.cluster_count()) * 7.0 * kHexagonArea;
  report.total_area_relative_error = std::abs(total_area - expected_area) / expected_area;

  report.pass = all_convex && !report.overlap_found && report.max_angle_dev <= cfg.mu_max &&
                report.total_area_relative_error <= cfg.tol_total_area_rel;
  return report;
}

VerifyReport verify_closeness(const Tiling& t, const Tiling& reference, const VerifyConfig& cfg) {
  if (t.generation.rings != reference.generation.rings ||
      t.pentagons.size() != reference.pentagons.size())
    throw std::invalid_argument("verify_closeness: layouts differ (rings or pentagon count)");
  VerifyReport report;
  for (std::size_t i = 0; i < t.pentagons.size(); ++i) {
    if (t.pentagons[i].id != reference.pentagons[i].id)
      throw std::invalid_argument("verify_closeness: pentagon ids do not match");
    report.max_closeness = std::max(
        report.max_closeness, eps_closeness(t.pentagons[i].polygon, reference.pentagons[i].polygon));
  }
  report.pass = report.max_closeness <= cfg.eps_max;
  return report;
}

VerifyReport verify_all(const Tiling& t, const Tiling* reference, const VerifyConfig& cfg) {
  VerifyReport report = verify_fairness(t, cfg);
  const VerifyReport incongruence = verify_incongruence(t, cfg);
  const VerifyReport geometry = verify_geometry(t, cfg);

  report.min_congruence_distance = incongruence.min_congruence_distance;
  report.min_congruence_pair = incongruence.min_congruence_pair;
  report.min_side_figure_distance = incongruence.min_side_figure_distance;
  report.min_side_figure_pair = incongruence.min_side_figure_pair;
  report.max_angle_dev = geometry.max_angle_dev;
  report.overlap_found = geometry.overlap_found;
  report.overlap_pair = geometry.overlap_pair;
  report.total_area_relative_error = geometry.total_area_relative_error;
  report.pass = report.pass && incongruence.pass && geometry.pass;

  if (reference) {
    const VerifyReport closeness = verify_closeness(t, *reference, cfg);
    report.max_closeness = closeness.max_closeness;
    report.pass = report.pass && closeness.pass;
  }
  return report;
}

}  // namespace fairtile
