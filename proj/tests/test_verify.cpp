#include <cmath>

#include "doctest.h"
#include "fairtile/patch.hpp"
#include "fairtile/verify.hpp"

using namespace fairtile;

namespace {

// A tiling with one pentagon vertex pushed outward along its exterior normal.
Tiling with_displaced_vertex(Tiling t, double amount) {
  std::vector<Point> vertices = t.pentagons[0].polygon.vertices();
  const Point before = vertices[1] - vertices[0];
  const Point after = vertices[2] - vertices[1];
  Point normal{before.y + after.y, -(before.x + after.x)};
  normal = (1.0 / norm(normal)) * normal;
  vertices[1] = vertices[1] + amount * normal;
  t.pentagons[0].polygon = ConvexPolygon(std::move(vertices));
  return t;
}

ConvexPolygon shifted(const ConvexPolygon& poly, Point offset) {
  std::vector<Point> v;
  for (const Point& p : poly.vertices()) v.push_back(p + offset);
  return ConvexPolygon(std::move(v));
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("fairness passes on generated patches and on the reference") {
  const Tiling t = generate_patch(1, 1e-3, 0.7, 0);
  const VerifyReport report = verify_fairness(t);
  CHECK(report.pass);
  CHECK(report.max_area_dev <= 1e-10);
  CHECK(report.max_perimeter_dev <= 1e-10);

  const VerifyReport ref_report = verify_fairness(reference_patch(0));
  CHECK(ref_report.pass);
  CHECK(ref_report.max_area_dev <= 1e-13);
  CHECK(ref_report.max_perimeter_dev <= 1e-13);
}

TEST_CASE("fairness fails once a vertex is displaced") {
  const Tiling bad = with_displaced_vertex(generate_patch(0, 1e-3, 0.7, 0), 0.01);
  const VerifyReport report = verify_fairness(bad);
  CHECK(!report.pass);
  CHECK(report.max_area_dev > 1e-4);
  CHECK(report.max_perimeter_dev > 1e-4);
}

TEST_CASE("incongruence rejects the unperturbed reference") {
  const VerifyReport report = verify_incongruence(reference_patch(0));
  CHECK(!report.pass);
  CHECK(report.min_congruence_distance < 1e-12);
}

TEST_CASE("incongruence passes on a generated patch and re-checks independently") {
  const Tiling t = generate_patch(1, 5e-3, 0.7, 0);
  const VerifyReport report = verify_incongruence(t);
  CHECK(report.pass);
  CHECK(report.min_congruence_distance >= 1e-9);
  CHECK(report.min_side_figure_distance >= 1e-9);
  CHECK(report.min_congruence_pair.first >= 0);
  CHECK(report.min_congruence_pair.second >= 0);
}

TEST_CASE("a mirrored duplicate pentagon defeats incongruence") {
  Tiling t = generate_patch(0, 1e-3, 0.7, 0);
  // Reflect pentagon 0 across the x axis and park it far away.
  std::vector<Point> mirrored;
  const ConvexPolygon& p = t.pentagons[0].polygon;
  mirrored.push_back({p[0].x + 100.0, -p[0].y});
  for (int i = p.size() - 1; i >= 1; --i) mirrored.push_back({p[i].x + 100.0, -p[i].y});
  t.pentagons[1].polygon = ConvexPolygon(std::move(mirrored));
  const VerifyReport report = verify_incongruence(t);
  CHECK(!report.pass);
  CHECK(report.min_congruence_distance < 1e-12);
}

TEST_CASE("geometry check finds overlaps and validates totals") {
  const Tiling t = generate_patch(0, 1e-3, 0.7, 0);
  const VerifyReport good = verify_geometry(t);
  CHECK(good.pass);
  CHECK(!good.overlap_found);
  CHECK(good.total_area_relative_error <= 1e-9);
  CHECK(good.max_angle_dev <= 1e-2);

  // Overlap control: duplicate a pentagon almost in place.
  Tiling bad = t;
  bad.pentagons[1].polygon = shifted(bad.pentagons[0].polygon, {0.1, 0.0});
  const VerifyReport report = verify_geometry(bad);
  CHECK(report.overlap_found);
  CHECK(!report.pass);
}

TEST_CASE("missing pentagons fail the total-area check") {
  Tiling truncated = generate_patch(0, 1e-3, 0.7, 0);
  truncated.pentagons.erase(truncated.pentagons.begin() + 20, truncated.pentagons.end());
  const VerifyReport report = verify_geometry(truncated);
  CHECK(!report.pass);
  CHECK(report.total_area_relative_error > 0.01);

  Tiling empty = truncated;
  empty.pentagons.clear();
  CHECK(!verify_geometry(empty).pass);
}

TEST_CASE("reference angles are canonical") {
  const VerifyReport report = verify_geometry(reference_patch(1));
  CHECK(report.max_angle_dev <= 1e-12);
  CHECK(!report.overlap_found);
  CHECK(report.pass);
}

TEST_CASE("closeness") {
  const Tiling ref = reference_patch(1);
  const VerifyReport self_report = verify_closeness(ref, ref);
  CHECK(self_report.max_closeness == 0.0);
  CHECK(self_report.pass);

  const Tiling t = generate_patch(1, 1e-3, 0.7, 0);
  const VerifyReport report = verify_closeness(t, ref);
  CHECK(report.pass);
  CHECK(report.max_closeness <= 1e-2);

  CHECK_THROWS_AS(verify_closeness(t, reference_patch(0)), std::invalid_argument);
}

TEST_CASE("tightening a tolerance can only flip pass to fail") {
  const Tiling t = generate_patch(0, 1e-3, 0.7, 0);
  VerifyConfig cfg;
  const VerifyReport loose = verify_all(t, nullptr, cfg);
  CHECK(loose.pass);

  cfg.tol_area = 1e-16;
  const VerifyReport tight = verify_all(t, nullptr, cfg);
  CHECK(!tight.pass);

  cfg.tol_area = 1.0;
  cfg.tol_perimeter = 1.0;
  cfg.mu_max = 1.0;
  cfg.delta_sep = 1e-12;
  const VerifyReport relaxed = verify_all(t, nullptr, cfg);
  CHECK(relaxed.pass);
}

TEST_CASE("combined report merges every measurement") {
  const Tiling t = generate_patch(0, 1e-3, 0.7, 0);
  const Tiling ref = reference_patch(0);
  const VerifyReport report = verify_all(t, &ref, VerifyConfig{});
  CHECK(report.pass);
  CHECK(report.max_area_dev > 0.0);
  CHECK(report.min_congruence_distance > 0.0);
  CHECK(std::isfinite(report.min_side_figure_distance));
  CHECK(report.max_closeness > 0.0);
  CHECK(report.total_area_relative_error >= 0.0);
}

}  // TEST_SUITE
