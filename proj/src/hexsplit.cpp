#include "fairtile/hexsplit.hpp"

#include <algorithm>
#include <vector>

namespace fairtile {

namespace {

// Corners of the regular unit hexagon at angles i*60 degrees, as closed-form
// values rather than cos/sin calls.
std::array<Point, 6> canonical_hexagon() {
  const double h = std::sqrt(3.0) / 2.0;
  return {Point{1.0, 0.0}, Point{0.5, h},  Point{-0.5, h},
          Point{-1.0, 0.0}, Point{-0.5, -h}, Point{0.5, -h}};
}

}  // namespace

SplitParams canonical_params() {
  const double s3 = std::sqrt(3.0);
  SplitParams v;
  v.hexagon = canonical_hexagon();
  v.inner = {Point{0.0, 0.0},
             Point{s3 / 2.0, (-3.0 + 2.0 * s3) / 2.0},
             Point{(-3.0 + s3) / 2.0, (3.0 - s3) / 2.0},
             Point{(3.0 - 2.0 * s3) / 2.0, -s3 / 2.0}};
  return v;
}

std::array<std::array<Point, 5>, 3> pentagon_vertices(const SplitParams& v) {
  const auto& h = v.hexagon;
  const auto& c = v.inner;
  return {{{c[0], c[1], h[1], h[2], c[2]},
           {c[0], c[2], h[3], h[4], c[3]},
           {c[0], c[3], h[5], h[0], c[1]}}};
}

std::array<double, 8> residuals(const SplitParams& v) {
  const auto& h = v.hexagon;
  const auto& c = v.inner;
  const auto pentagons = pentagon_vertices(v);
  std::array<double, 8> f;
  f[0] = cross(c[1] - h[0], h[1] - h[0]);
  f[1] = cross(c[2] - h[2], h[3] - h[2]);
  f[2] = cross(c[3] - h[4], h[5] - h[4]);
  const double area1 = signed_area(std::span(pentagons[0]));
  f[3] = signed_area(std::span(pentagons[1])) - area1;
  f[4] = signed_area(std::span(pentagons[2])) - area1;
  f[5] = perimeter(std::span(pentagons[0])) - kPentagonPerimeter;
  f[6] = perimeter(std::span(pentagons[1])) - kPentagonPerimeter;
  f[7] = perimeter(std::span(pentagons[2])) - kPentagonPerimeter;
  return f;
}

namespace {

// Which interior point sits at each pentagon slot (-1: fixed hexagon corner).
constexpr std::array<std::array<int, 5>, 3> kInnerSlot = {{{0, 1, -1, -1, 2},
                                                           {0, 2, -1, -1, 3},
                                                           {0, 3, -1, -1, 1}}};

Point area_gradient(const std::array<Point, 5>& p, int k) {
  const Point prev = p[static_cast<std::size_t>((k + 4) % 5)];
  const Point next = p[static_cast<std::size_t>((k + 1) % 5)];
  return {0.5 * (next.y - prev.y), 0.5 * (prev.x - next.x)};
}

Point perimeter_gradient(const std::array<Point, 5>& p, int k) {
  const Point cur = p[static_cast<std::size_t>(k)];
  const Point prev = p[static_cast<std::size_t>((k + 4) % 5)];
  const Point next = p[static_cast<std::size_t>((k + 1) % 5)];
  const double len_in = distance(prev, cur);
  const double len_out = distance(next, cur);
  if (len_in < 1e-15 || len_out < 1e-15)
    throw DegenerateInputError("jacobian_ab: zero-length pentagon edge");
  return (1.0 / len_in) * (cur - prev) + (1.0 / len_out) * (cur - next);
}

void add_entry(Matrix& jac, int row, int inner_index, Point grad) {
  jac(row, inner_index) += grad.x;
  jac(row, inner_index + 4) += grad.y;
}

}  // namespace

Matrix jacobian_ab(const SplitParams& v) {
  const auto& h = v.hexagon;
  const auto pentagons = pentagon_vertices(v);
  Matrix jac(8, 8);

  // Collinearity rows: d/d c_i of cross(c_i - h_a, h_b - h_a).
  add_entry(jac, 0, 1, {h[1].y - h[0].y, -(h[1].x - h[0].x)});
  add_entry(jac, 1, 2, {h[3].y - h[2].y, -(h[3].x - h[2].x)});
  add_entry(jac, 2, 3, {h[5].y - h[4].y, -(h[5].x - h[4].x)});

  // Area rows: f4 = area(P2) - area(P1), f5 = area(P3) - area(P1).
  for (int slot = 0; slot < 5; ++slot) {
    if (kInnerSlot[1][static_cast<std::size_t>(slot)] >= 0)
      add_entry(jac, 3, kInnerSlot[1][static_cast<std::size_t>(slot)], area_gradient(pentagons[1], slot));
    if (kInnerSlot[2][static_cast<std::size_t>(slot)] >= 0)
      add_entry(jac, 4, kInnerSlot[2][static_cast<std::size_t>(slot)], area_gradient(pentagons[2], slot));
    if (kInnerSlot[0][static_cast<std::size_t>(slot)] >= 0) {
      const Point g = area_gradient(pentagons[0], slot);
      add_entry(jac, 3, kInnerSlot[0][static_cast<std::size_t>(slot)], {-g.x, -g.y});
      add_entry(jac, 4, kInnerSlot[0][static_cast<std::size_t>(slot)], {-g.x, -g.y});
    }
  }

  // Perimeter rows.
  for (int m = 0; m < 3; ++m)
    for (int slot = 0; slot < 5; ++slot)
      if (kInnerSlot[static_cast<std::size_t>(m)][static_cast<std::size_t>(slot)] >= 0)
        add_entry(jac, 5 + m, kInnerSlot[static_cast<std::size_t>(m)][static_cast<std::size_t>(slot)],
                  perimeter_gradient(pentagons[static_cast<std::size_t>(m)], slot));

  return jac;
}

RigidMotion fit_regular_hexagon(const ConvexPolygon& hexagon) {
  const std::array<Point, 6> ref = canonical_hexagon();
  Point ref_mean{0.0, 0.0};
  Point in_mean{0.0, 0.0};
  for (int i = 0; i < 6; ++i) {
    ref_mean = ref_mean + ref[static_cast<std::size_t>(i)];
    in_mean = in_mean + hexagon[i];
  }
  ref_mean = (1.0 / 6.0) * ref_mean;
  in_mean = (1.0 / 6.0) * in_mean;
  double sum_cross = 0.0;
  double sum_dot = 0.0;
  for (int i = 0; i < 6; ++i) {
    const Point r = ref[static_cast<std::size_t>(i)] - ref_mean;
    const Point q = hexagon[i] - in_mean;
    sum_cross += cross(r, q);
    sum_dot += dot(r, q);
  }
  const double angle = std::atan2(sum_cross, sum_dot);
  RigidMotion motion{std::cos(angle), std::sin(angle), {}};
  const Point rotated_mean{motion.c * ref_mean.x - motion.s * ref_mean.y,
                           motion.s * ref_mean.x + motion.c * ref_mean.y};
  motion.t = in_mean - rotated_mean;
  return motion;
}

SplitParams init_guess(const ConvexPolygon& hexagon) {
  if (hexagon.size() != 6) throw DegenerateInputError("init_guess: expected 6 vertices");
  if (signed_area(hexagon) < 0.1)
    throw NeighborhoodExceededError("init_guess: hexagon area below admissible range");
  const RigidMotion motion = fit_regular_hexagon(hexagon);
  const SplitParams canonical = canonical_params();
  SplitParams guess;
  for (int i = 0; i < 6; ++i) guess.hexagon[static_cast<std::size_t>(i)] = hexagon[i];
  for (int i = 0; i < 4; ++i)
    guess.inner[static_cast<std::size_t>(i)] = motion.apply(canonical.inner[static_cast<std::size_t>(i)]);
  return guess;
}

namespace {

std::array<double, 8> pack_inner(const std::array<Point, 4>& inner) {
  std::array<double, 8> x;
  for (int i = 0; i < 4; ++i) {
    x[static_cast<std::size_t>(i)] = inner[static_cast<std::size_t>(i)].x;
    x[static_cast<std::size_t>(i + 4)] = inner[static_cast<std::size_t>(i)].y;
  }
  return x;
}

std::array<Point, 4> unpack_inner(std::span<const double> x) {
  std::array<Point, 4> inner;
  for (int i = 0; i < 4; ++i)
    inner[static_cast<std::size_t>(i)] = {x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i + 4)]};
  return inner;
}

}  // namespace

FairSplit split_hexagon(const ConvexPolygon& hexagon, const SolverConfig& cfg, double eps_max) {
  SplitParams params = init_guess(hexagon);

  const RigidMotion motion = fit_regular_hexagon(hexagon);
  std::vector<Point> fitted;
  fitted.reserve(6);
  for (const Point& corner : canonical_hexagon()) fitted.push_back(motion.apply(corner));
  const double closeness = eps_closeness(hexagon, ConvexPolygon(std::move(fitted)));
  if (closeness > eps_max)
    throw NeighborhoodExceededError("split_hexagon: hexagon too far from regular (eps = " +
                                    std::to_string(closeness) + ")");

  const auto residual_fn = [&params](std::span<const double> x) {
    SplitParams trial = params;
    trial.inner = unpack_inner(x);
    const std::array<double, 8> f = residuals(trial);
    return std::vector<double>(f.begin(), f.end());
  };
  const auto jacobian_fn = [&params](std::span<const double> x) {
    SplitParams trial = params;
    trial.inner = unpack_inner(x);
    return jacobian_ab(trial);
  };

  const std::array<double, 8> x0 = pack_inner(params.inner);
  SolveReport report;
  try {
    report = newton_solve(residual_fn, JacobianFn(jacobian_fn), std::span<const double>(x0), cfg);
  } catch (const SingularMatrixError& e) {
    SolveReport best;
    best.solution.assign(x0.begin(), x0.end());
    throw SplitFailureError(std::string("split_hexagon: ") + e.what(), std::move(best));
  } catch (const NonConvergenceError& e) {
    throw SplitFailureError(std::string("split_hexagon: ") + e.what(), e.best());
  }

  params.inner = unpack_inner(report.solution);
  const auto tuples = pentagon_vertices(params);
  std::vector<ConvexPolygon> pentagons;
  pentagons.reserve(3);
  for (const auto& tuple : tuples) {
    try {
      pentagons.emplace_back(std::vector<Point>(tuple.begin(), tuple.end()));
    } catch (const DegenerateInputError&) {
      throw NeighborhoodExceededError("split_hexagon: produced a non-convex pentagon");
    }
  }

  double deviation = 0.0;
  for (const ConvexPolygon& pentagon : pentagons) {
    const std::vector<double> angles = interior_angles(pentagon);
    for (int i = 0; i < 5; ++i)
      deviation = std::max(deviation, std::abs(angles[static_cast<std::size_t>(i)] -
                                               kPentagonAngles[static_cast<std::size_t>(i)]));
  }

  return FairSplit{{pentagons[0], pentagons[1], pentagons[2]},
                   {kMarkedPentagonSide, kMarkedPentagonSide, kMarkedPentagonSide},
                   std::move(report),
                   deviation};
}

}  // namespace fairtile
