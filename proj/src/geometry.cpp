#include "fairtile/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace fairtile {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::size_t wrap(std::size_t i, std::size_t n) { return i % n; }

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices, const GeometryTolerances& tol)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw DegenerateInputError("polygon needs at least 3 vertices");
  for (const Point& p : vertices_) {
    if (!finite(p)) throw DegenerateInputError("polygon vertex is not finite");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(vertices_[i], vertices_[wrap(i + 1, n)]) <= tol.tol_coincide)
      throw DegenerateInputError("coincident consecutive vertices");
  }
  double angle_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point u = vertices_[wrap(i + n - 1, n)] - vertices_[i];
    const Point w = vertices_[wrap(i + 1, n)] - vertices_[i];
    const double angle = std::atan2(cross(w, u), dot(w, u));
    if (!(angle > 0.0) || !(angle < kPi - tol.tol_angle))
      throw DegenerateInputError("polygon is not strictly convex and counterclockwise");
    angle_sum += angle;
  }
  // Winding check: a convex traversal closes after one full turn.
  if (std::abs(angle_sum - (static_cast<double>(n) - 2.0) * kPi) > 1e-6)
    throw DegenerateInputError("vertex list does not wind once around a convex region");
}

double signed_area(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw DegenerateInputError("signed_area: polygon needs at least 3 vertices");
  const Point anchor = vertices[0];
  double twice_area = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i)
    twice_area += cross(vertices[i] - anchor, vertices[i + 1] - anchor);
  return 0.5 * twice_area;
}

double signed_area(const ConvexPolygon& poly) { return signed_area(std::span(poly.vertices())); }

double perimeter(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw DegenerateInputError("perimeter: polygon needs at least 3 vertices");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += distance(vertices[i], vertices[wrap(i + 1, n)]);
  return sum;
}

double perimeter(const ConvexPolygon& poly) { return perimeter(std::span(poly.vertices())); }

std::vector<double> interior_angles(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw DegenerateInputError("interior_angles: polygon needs at least 3 vertices");
  std::vector<double> angles(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point u = vertices[wrap(i + n - 1, n)] - vertices[i];
    const Point w = vertices[wrap(i + 1, n)] - vertices[i];
    if (norm(u) == 0.0 || norm(w) == 0.0)
      throw DegenerateInputError("interior_angles: coincident consecutive vertices");
    angles[i] = std::atan2(cross(w, u), dot(w, u));
  }
  return angles;
}

std::vector<double> interior_angles(const ConvexPolygon& poly) {
  return interior_angles(std::span(poly.vertices()));
}

SideFigure side_figure(const ConvexPolygon& poly, int side_index) {
  const int n = poly.size();
  if (side_index < 0 || side_index >= n) throw std::out_of_range("side_figure: side index out of range");
  const std::vector<double> angles = interior_angles(poly);
  const int next = (side_index + 1) % n;
  return {distance(poly[side_index], poly[next]), angles[static_cast<std::size_t>(side_index)],
          angles[static_cast<std::size_t>(next)]};
}

double side_figure_distance(const SideFigure& f, const SideFigure& g) {
  const double dl = std::abs(f.length - g.length);
  const double direct = std::max({dl, std::abs(f.angle_left - g.angle_left),
                                  std::abs(f.angle_right - g.angle_right)});
  const double swapped = std::max({dl, std::abs(f.angle_left - g.angle_right),
                                   std::abs(f.angle_right - g.angle_left)});
  return std::min(direct, swapped);
}

namespace {

struct FeatureSequence {
  std::vector<double> length;  // side i runs from vertex i to vertex i+1
  std::vector<double> angle;   // interior angle at vertex i
};

FeatureSequence features(const ConvexPolygon& poly) {
  const std::size_t n = poly.vertices().size();
  FeatureSequence f;
  f.length.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    f.length[i] = distance(poly.vertices()[i], poly.vertices()[wrap(i + 1, n)]);
  f.angle = interior_angles(poly);
  return f;
}

}  // namespace

double congruence_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.size() != q.size()) return std::numeric_limits<double>::infinity();
  const std::size_t n = p.vertices().size();
  const FeatureSequence fp = features(p);
  const FeatureSequence fq = features(q);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < n; ++c) {
    double fwd = 0.0;
    double rev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      fwd = std::max(fwd, std::abs(fp.length[i] - fq.length[wrap(i + c, n)]));
      fwd = std::max(fwd, std::abs(fp.angle[i] - fq.angle[wrap(i + c, n)]));
      // Orientation-reversing alignment: vertex i pairs with vertex c-i, so
      // side i (from vertex i) pairs with q's side ending at vertex c-i.
      rev = std::max(rev, std::abs(fp.angle[i] - fq.angle[wrap(c + n - i, n)]));
      rev = std::max(rev, std::abs(fp.length[i] - fq.length[wrap(c + 2 * n - i - 1, n)]));
    }
    best = std::min({best, fwd, rev});
  }
  return best;
}

double congruence_distance_lower_bound(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.size() != q.size()) return std::numeric_limits<double>::infinity();
  FeatureSequence fp = features(p);
  FeatureSequence fq = features(q);
  std::sort(fp.length.begin(), fp.length.end());
  std::sort(fq.length.begin(), fq.length.end());
  std::sort(fp.angle.begin(), fp.angle.end());
  std::sort(fq.angle.begin(), fq.angle.end());
  double bound = 0.0;
  for (std::size_t i = 0; i < fp.length.size(); ++i) {
    bound = std::max(bound, std::abs(fp.length[i] - fq.length[i]));
    bound = std::max(bound, std::abs(fp.angle[i] - fq.angle[i]));
  }
  return bound;
}

double eps_closeness(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.size() != q.size())
    throw DegenerateInputError("eps_closeness: vertex counts differ");
  const std::size_t n = p.vertices().size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < n; ++c) {
    double fwd = 0.0;
    double rev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      fwd = std::max(fwd, distance(p.vertices()[i], q.vertices()[wrap(i + c, n)]));
      rev = std::max(rev, distance(p.vertices()[i], q.vertices()[wrap(c + n - i, n)]));
    }
    best = std::min({best, fwd, rev});
  }
  return best;
}

namespace {

// Signed gap between the polygons along the outward normal of one directed
// edge of `self`: positive when `other` lies entirely outside that edge.
double axis_gap(const ConvexPolygon& self, const ConvexPolygon& other, std::size_t edge) {
  const std::size_t n = self.vertices().size();
  const Point a = self.vertices()[edge];
  const Point b = self.vertices()[wrap(edge + 1, n)];
  const Point d = b - a;
  const double len = norm(d);
  const Point outward{d.y / len, -d.x / len};
  double self_max = -std::numeric_limits<double>::infinity();
  for (const Point& v : self.vertices()) self_max = std::max(self_max, dot(outward, v));
  double other_min = std::numeric_limits<double>::infinity();
  for (const Point& v : other.vertices()) other_min = std::min(other_min, dot(outward, v));
  return other_min - self_max;
}

}  // namespace

double separation_gap(const ConvexPolygon& p, const ConvexPolygon& q) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < p.vertices().size(); ++e) best = std::max(best, axis_gap(p, q, e));
  for (std::size_t e = 0; e < q.vertices().size(); ++e) best = std::max(best, axis_gap(q, p, e));
  return best;
}

}  // namespace fairtile
