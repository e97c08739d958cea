#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "fairtile/geometry.hpp"
#include "fairtile/nlsolve.hpp"

namespace fairtile {

// Common perimeter of every pentagon produced by the split.
inline const double kPentagonPerimeter = 2.0 + 3.0 * std::sqrt(2.0) - std::sqrt(6.0);

// Area of each pentagon when the hexagon is regular with side 1.
inline const double kPentagonArea = std::sqrt(3.0) / 2.0;

// Interior angles of the unperturbed pentagon in the frozen vertex order
// (center point, side point, hexagon corner, hexagon corner, side point).
inline constexpr std::array<double, 5> kPentagonAngles = {
    2.0 * std::numbers::pi / 3.0, 5.0 * std::numbers::pi / 12.0, 2.0 * std::numbers::pi / 3.0,
    2.0 * std::numbers::pi / 3.0, 7.0 * std::numbers::pi / 12.0};

// Index of the hexagon-boundary side inside each pentagon's frozen vertex
// order; the side between the two angles near 2pi/3.
inline constexpr int kMarkedPentagonSide = 2;

// Full parameter vector of a hexagon split: the six hexagon vertices plus the
// four interior points (the shared center and one point on every other
// hexagon side).
struct SplitParams {
  std::array<Point, 6> hexagon;
  std::array<Point, 4> inner;
};

// The unperturbed configuration: regular unit hexagon with vertices at angles
// (i-1)*60 degrees, interior points at radius (3*sqrt(2)-sqrt(6))/2 and angles
// (1+8(i-1))*15 degrees, center at the origin.
SplitParams canonical_params();

// The three pentagon vertex tuples in the frozen order:
//   P1 = (c0, c1, h2, h3, c2), P2 = (c0, c2, h4, h5, c3), P3 = (c0, c3, h6, h1, c1)
// with h = hexagon corners (1-based) and c = interior points (0-based).
std::array<std::array<Point, 5>, 3> pentagon_vertices(const SplitParams& v);

// The eight constraint residuals:
//   f1..f3  collinearity of c1, c2, c3 with hexagon sides h1h2, h3h4, h5h6,
//   f4, f5  area(P2)-area(P1), area(P3)-area(P1),
//   f6..f8  perim(Pi) - kPentagonPerimeter.
std::array<double, 8> residuals(const SplitParams& v);

// Analytic 8x8 Jacobian of the residuals with respect to the interior points,
// columns ordered (c0.x, c1.x, c2.x, c3.x, c0.y, c1.y, c2.y, c3.y).
Matrix jacobian_ab(const SplitParams& v);

// Seeds the interior points by the orientation-preserving rigid fit of the
// canonical hexagon onto the input (least squares over vertices in the given
// cyclic labeling); the hexagon block is taken verbatim.
SplitParams init_guess(const ConvexPolygon& hexagon);

// Least-squares rotation+translation carrying the canonical regular hexagon
// onto the given six vertices (no reflection).
RigidMotion fit_regular_hexagon(const ConvexPolygon& hexagon);

class NeighborhoodExceededError : public Error {
 public:
  using Error::Error;
};

class SplitFailureError : public Error {
 public:
  SplitFailureError(const std::string& message, SolveReport report)
      : Error(message), report_(std::move(report)) {}
  const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

struct FairSplit {
  std::array<ConvexPolygon, 3> pentagons;  // frozen vertex orders, counterclockwise
  std::array<int, 3> marked_side;          // hexagon-boundary side index per pentagon
  SolveReport report;
  double max_angle_deviation = 0.0;  // achieved deviation from kPentagonAngles
};

// Splits a hexagon close to the regular unit hexagon into three convex
// pentagons of equal area and perimeter kPentagonPerimeter. Admission requires
// eps_closeness to the best-fit regular hexagon at most eps_max. The marked
// hexagon sides are, in the input labeling, sides 1-2, 3-4 and 5-6 (0-based),
// and end up as side kMarkedPentagonSide of P1, P2, P3 respectively.
FairSplit split_hexagon(const ConvexPolygon& hexagon, const SolverConfig& cfg = {},
                        double eps_max = 0.05);

}  // namespace fairtile
