#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fairtile/geometry.hpp"

using namespace fairtile;

namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon unit_square() {
  return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon regular_hexagon_trig() {
  std::vector<Point> v;
  for (int i = 0; i < 6; ++i)
    v.push_back({std::cos(i * kPi / 3.0), std::sin(i * kPi / 3.0)});
  return ConvexPolygon(std::move(v));
}

// The unperturbed pentagon, closed-form coordinates.
ConvexPolygon base_pentagon() {
  const double s3 = std::sqrt(3.0);
  return ConvexPolygon({{0.0, 0.0},
                        {s3 / 2.0, (-3.0 + 2.0 * s3) / 2.0},
                        {0.5, s3 / 2.0},
                        {-0.5, s3 / 2.0},
                        {(-3.0 + s3) / 2.0, (3.0 - s3) / 2.0}});
}

ConvexPolygon transformed(const ConvexPolygon& poly, const RigidMotion& motion) {
  std::vector<Point> v;
  for (const Point& p : poly.vertices()) v.push_back(motion.apply(p));
  return ConvexPolygon(std::move(v));
}

ConvexPolygon mirrored(const ConvexPolygon& poly) {
  // Reflect across the x axis, then reverse to restore counterclockwise order.
  std::vector<Point> v;
  v.push_back({poly[0].x, -poly[0].y});
  for (int i = poly.size() - 1; i >= 1; --i) v.push_back({poly[i].x, -poly[i].y});
  return ConvexPolygon(std::move(v));
}

ConvexPolygon rotated_labels(const ConvexPolygon& poly, int shift) {
  const int n = poly.size();
  std::vector<Point> v;
  for (int i = 0; i < n; ++i) v.push_back(poly[(i + shift) % n]);
  return ConvexPolygon(std::move(v));
}

// Alignment scan that only knows forward matching; reversed alignments come
// from an explicitly mirrored polygon, so this oracle is independent of the
// library's reversed-index bookkeeping.
double forward_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
  const int n = p.size();
  const std::vector<double> pa = interior_angles(p);
  const std::vector<double> qa = interior_angles(q);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(distance(p[i], p[(i + 1) % n]) -
                                     distance(q[i], q[(i + 1) % n])));
    worst = std::max(worst, std::abs(pa[static_cast<std::size_t>(i)] -
                                     qa[static_cast<std::size_t>(i)]));
  }
  return worst;
}

double brute_force_congruence(const ConvexPolygon& p, const ConvexPolygon& q) {
  double best = std::numeric_limits<double>::infinity();
  const ConvexPolygon qm = mirrored(q);
  for (int shift = 0; shift < q.size(); ++shift) {
    best = std::min(best, forward_distance(p, rotated_labels(q, shift)));
    best = std::min(best, forward_distance(p, rotated_labels(qm, shift)));
  }
  return best;
}

// Random strictly convex polygon: points on a circle in angular order.
ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int n, double radius = 1.0) {
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * kPi);
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (double& a : angles) a = uniform(rng);
  std::sort(angles.begin(), angles.end());
  for (std::size_t i = 1; i < angles.size(); ++i)
    if (angles[i] - angles[i - 1] < 1e-3) angles[i] = angles[i - 1] + 1e-3;
  std::vector<Point> v;
  for (double a : angles) v.push_back({radius * std::cos(a), radius * std::sin(a)});
  return ConvexPolygon(std::move(v));
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), DegenerateInputError);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), DegenerateInputError);
  // clockwise
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), DegenerateInputError);
  // reflex vertex
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.1}, {2, 2}, {0, 2}}), DegenerateInputError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {nan, 1}}), DegenerateInputError);
}

TEST_CASE("signed area examples") {
  CHECK(signed_area(unit_square()) == 1.0);
  CHECK(signed_area(regular_hexagon_trig()) ==
        doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(signed_area(base_pentagon()) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  std::vector<Point> two{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(signed_area(std::span<const Point>(two)), DegenerateInputError);
}

TEST_CASE("signed area matches the pentagon fan formula bit for bit") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ConvexPolygon pentagon = random_convex_polygon(rng, 5, 2.0);
    const auto& p = pentagon.vertices();
    const double fan = 0.5 * (cross(p[1] - p[0], p[2] - p[0]) + cross(p[2] - p[0], p[3] - p[0]) +
                              cross(p[3] - p[0], p[4] - p[0]));
    CHECK(signed_area(pentagon) == fan);
  }
}

TEST_CASE("perimeter examples") {
  CHECK(perimeter(unit_square()) == 4.0);
  CHECK(perimeter(base_pentagon()) ==
        doctest::Approx(2.0 + 3.0 * std::sqrt(2.0) - std::sqrt(6.0)).epsilon(1e-15));
  CHECK(perimeter(regular_hexagon_trig()) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("interior angles") {
  for (double a : interior_angles(unit_square()))
    CHECK(a == doctest::Approx(kPi / 2).epsilon(1e-15));
  for (double a : interior_angles(regular_hexagon_trig()))
    CHECK(a == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));

  const std::vector<double> angles = interior_angles(base_pentagon());
  const std::array<double, 5> expected = {2.0 * kPi / 3.0, 5.0 * kPi / 12.0, 2.0 * kPi / 3.0,
                                          2.0 * kPi / 3.0, 7.0 * kPi / 12.0};
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(angles[i] == doctest::Approx(expected[i]).epsilon(1e-14));

  double sum = 0.0;
  for (double a : angles) sum += a;
  CHECK(std::abs(sum - 3.0 * kPi) < 1e-12);

  // Raw vertex data with coincident neighbours is rejected.
  const std::vector<Point> pinched{{0, 0}, {1, 0}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(interior_angles(std::span<const Point>(pinched)), DegenerateInputError);
}

TEST_CASE("angle sum property for random polygons up to magnitude 1e3") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> sides(3, 9);
  std::uniform_real_distribution<double> scale(0.5, 1000.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = sides(rng);
    const ConvexPolygon poly = random_convex_polygon(rng, n, scale(rng));
    double sum = 0.0;
    for (double a : interior_angles(poly)) {
      CHECK(a > 0.0);
      CHECK(a < kPi);
      sum += a;
    }
    CHECK(std::abs(sum - (n - 2) * kPi) < 1e-10);
  }
}

TEST_CASE("side figures") {
  const SideFigure square_side = side_figure(unit_square(), 0);
  CHECK(square_side.length == 1.0);
  CHECK(square_side.angle_left == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(square_side.angle_right == doctest::Approx(kPi / 2).epsilon(1e-15));

  // Side 2 of the base pentagon is the hexagon-boundary side; side 0 joins
  // the two interior points.
  const SideFigure marked = side_figure(base_pentagon(), 2);
  CHECK(marked.length == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(marked.angle_left == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(marked.angle_right == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));

  const SideFigure radial = side_figure(base_pentagon(), 0);
  CHECK(radial.length ==
        doctest::Approx((3.0 * std::sqrt(2.0) - std::sqrt(6.0)) / 2.0).epsilon(1e-14));
  CHECK(radial.angle_left == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(radial.angle_right == doctest::Approx(5.0 * kPi / 12.0).epsilon(1e-14));

  CHECK_THROWS_AS(side_figure(unit_square(), 4), std::out_of_range);
  CHECK_THROWS_AS(side_figure(unit_square(), -1), std::out_of_range);
}

TEST_CASE("side figure distance") {
  CHECK(side_figure_distance({1, 2 * kPi / 3, 5 * kPi / 12}, {1, 5 * kPi / 12, 2 * kPi / 3}) == 0.0);
  CHECK(side_figure_distance({1, 2.0, 2.1}, {1, 2.0, 2.2}) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(side_figure_distance({1.05, 2.0, 2.1}, {1.0, 2.0, 2.1}) ==
        doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("congruence distance is an isometry invariant") {
  const ConvexPolygon p = base_pentagon();
  const RigidMotion motion = make_motion(37.0 * kPi / 180.0, {3.5, -2.25});
  CHECK(congruence_distance(p, transformed(p, motion)) < 1e-12);
  CHECK(congruence_distance(p, mirrored(p)) < 1e-12);
  CHECK(congruence_distance(p, rotated_labels(p, 2)) < 1e-12);
}

TEST_CASE("congruence distance equals the brute-force alignment minimum") {
  const ConvexPolygon p = base_pentagon();

  // One vertex moved outward along its exterior normal by 0.01.
  std::vector<Point> moved = p.vertices();
  const Point before = moved[1] - moved[0];
  const Point after = moved[2] - moved[1];
  Point normal{before.y + after.y, -(before.x + after.x)};
  normal = (1.0 / norm(normal)) * normal;
  moved[1] = moved[1] + 0.01 * normal;
  const ConvexPolygon q(std::move(moved));

  const double d = congruence_distance(p, q);
  CHECK(d > 0.0);
  CHECK(d == doctest::Approx(brute_force_congruence(p, q)).epsilon(1e-14));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const ConvexPolygon a = random_convex_polygon(rng, 5, 1.5);
    const ConvexPolygon b = random_convex_polygon(rng, 5, 1.5);
    CHECK(congruence_distance(a, b) ==
          doctest::Approx(brute_force_congruence(a, b)).epsilon(1e-13));
    CHECK(congruence_distance(a, b) == doctest::Approx(congruence_distance(b, a)).epsilon(1e-13));
    CHECK(congruence_distance(a, a) == 0.0);
    CHECK(congruence_distance_lower_bound(a, b) <= congruence_distance(a, b) + 1e-15);
  }
}

TEST_CASE("congruence distance scaling behaviour") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> scales(0.1, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const ConvexPolygon a = random_convex_polygon(rng, 6, 2.0);
    const ConvexPolygon b = random_convex_polygon(rng, 6, 2.0);
    const double s = scales(rng);
    const auto scaled = [s](const ConvexPolygon& poly) {
      std::vector<Point> v;
      for (const Point& p : poly.vertices()) v.push_back(s * p);
      return ConvexPolygon(std::move(v));
    };
    const double original = congruence_distance(a, b);
    const double after = congruence_distance(scaled(a), scaled(b));
    CHECK(after <= std::max(s, 1.0) * original + 1e-12);
  }
}

TEST_CASE("congruence distance sentinel for different vertex counts") {
  CHECK(std::isinf(congruence_distance(unit_square(), base_pentagon())));
}

TEST_CASE("measure invariance under rigid motions") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> shift(-1000.0, 1000.0);
  for (int trial = 0; trial < 30; ++trial) {
    const ConvexPolygon poly = random_convex_polygon(rng, 5, 3.0);
    const RigidMotion motion = make_motion(angle(rng), {shift(rng), shift(rng)});
    const ConvexPolygon moved = transformed(poly, motion);
    CHECK(std::abs(signed_area(poly) - signed_area(moved)) < 1e-10);
    CHECK(std::abs(perimeter(poly) - perimeter(moved)) < 1e-10);
    const std::vector<double> a0 = interior_angles(poly);
    const std::vector<double> a1 = interior_angles(moved);
    for (std::size_t i = 0; i < a0.size(); ++i) CHECK(std::abs(a0[i] - a1[i]) < 1e-10);
    CHECK(congruence_distance(poly, moved) < 1e-10);
  }
}

TEST_CASE("eps closeness") {
  const ConvexPolygon hexagon = regular_hexagon_trig();
  CHECK(eps_closeness(hexagon, hexagon) == 0.0);

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> jitter(-0.007, 0.007);
  std::vector<Point> moved;
  for (const Point& p : hexagon.vertices()) moved.push_back({p.x + jitter(rng), p.y + jitter(rng)});
  CHECK(eps_closeness(hexagon, ConvexPolygon(std::move(moved))) <= 0.01);

  // Rotation by 60 degrees about the center is a vertex relabeling.
  const RigidMotion sixth = make_motion(kPi / 3.0, {0, 0});
  CHECK(eps_closeness(hexagon, transformed(hexagon, sixth)) < 1e-15);

  CHECK_THROWS_AS(eps_closeness(hexagon, unit_square()), DegenerateInputError);
}

TEST_CASE("separation gap") {
  const ConvexPolygon a = unit_square();
  // Overlapping in a 0.5 x 1 strip.
  const ConvexPolygon b({{0.5, 0}, {1.5, 0}, {1.5, 1}, {0.5, 1}});
  CHECK(separation_gap(a, b) == doctest::Approx(-0.5).epsilon(1e-12));
  // Sharing an edge only.
  const ConvexPolygon c({{1, 0}, {2, 0}, {2, 1}, {1, 1}});
  CHECK(std::abs(separation_gap(a, c)) < 1e-12);
  // Fully separated.
  const ConvexPolygon d({{3, 0}, {4, 0}, {4, 1}, {3, 1}});
  CHECK(separation_gap(a, d) == doctest::Approx(2.0).epsilon(1e-12));
}

}  // TEST_SUITE
