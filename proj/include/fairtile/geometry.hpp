#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "fairtile/errors.hpp"

namespace fairtile {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

// Rotation by a fixed angle followed by a translation (orientation-preserving).
struct RigidMotion {
  double c = 1.0;  // cos of the rotation angle
  double s = 0.0;  // sin of the rotation angle
  Point t;

  Point apply(Point p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y}; }
};

inline RigidMotion make_motion(double angle, Point translation) {
  return {std::cos(angle), std::sin(angle), translation};
}

struct GeometryTolerances {
  double tol_angle = 1e-9;     // interior angles must stay in (0, pi - tol_angle)
  double tol_coincide = 1e-12; // minimum distance between consecutive vertices
};

// Strictly convex polygon with counterclockwise vertex order. The constructor
// validates vertex count, finiteness, distinctness, convexity and winding and
// throws DegenerateInputError otherwise.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices, const GeometryTolerances& tol = {});

  const std::vector<Point>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Point& operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Point> vertices_;
};

// A polygon side plus the interior angles at its two endpoints. Determined up
// to congruence (reflections included) by the length and the unordered angle
// pair.
struct SideFigure {
  double length = 0.0;
  double angle_left = 0.0;   // interior angle at the side's first vertex
  double angle_right = 0.0;  // interior angle at the side's second vertex
};

// Signed area, counterclockwise positive. Triangle fan anchored at the first
// vertex, summed left to right; residual code relies on this exact evaluation
// order for reproducibility.
double signed_area(std::span<const Point> vertices);
double signed_area(const ConvexPolygon& poly);

double perimeter(std::span<const Point> vertices);
double perimeter(const ConvexPolygon& poly);

// Interior angle at each vertex via atan2 of cross/dot of the edge vectors.
std::vector<double> interior_angles(std::span<const Point> vertices);
std::vector<double> interior_angles(const ConvexPolygon& poly);

SideFigure side_figure(const ConvexPolygon& poly, int side_index);

// Min over identity and angle swap of the max component difference; zero iff
// the figures are congruent (a side figure has a mirror symmetry).
double side_figure_distance(const SideFigure& f, const SideFigure& g);

// Congruence pseudo-distance between convex polygons: L-infinity distance of
// the (side length, interior angle) cyclic feature sequences, minimized over
// all n rotations and both orientations. Zero iff congruent under a Euclidean
// isometry, reflections included. +infinity when vertex counts differ.
double congruence_distance(const ConvexPolygon& p, const ConvexPolygon& q);

// Cheap lower bound for congruence_distance: L-infinity distance between the
// sorted side-length vectors and sorted angle vectors.
double congruence_distance_lower_bound(const ConvexPolygon& p, const ConvexPolygon& q);

// Smallest max vertex-to-vertex distance over cyclic-order-preserving vertex
// bijections (n rotations, optionally reversed). Throws when vertex counts
// differ.
double eps_closeness(const ConvexPolygon& p, const ConvexPolygon& q);

// Largest separating-axis gap over the edge normals of both polygons.
// Positive: disjoint; near zero: touching; negative: overlapping interiors
// with |gap| penetration along the best axis.
double separation_gap(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace fairtile
