#include "fairtile/cluster.hpp"

#include <stdexcept>
#include <string>

namespace fairtile {

namespace {

// Closed-form coordinates (half-integers and multiples of sqrt(3)/2) keep the
// fixed cluster boundary arithmetic exact.
Point unit_corner(int k) {
  const double h = std::sqrt(3.0) / 2.0;
  constexpr double kX[6] = {1.0, 0.5, -0.5, -1.0, -0.5, 0.5};
  constexpr double kY[6] = {0.0, 1.0, 1.0, 0.0, -1.0, -1.0};
  const int i = ((k % 6) + 6) % 6;
  return {kX[i], kY[i] * h};
}

// Petal centers at distance sqrt(3) in directions 30 + 60*j degrees.
Point petal_center(int j) {
  const double h = std::sqrt(3.0) / 2.0;
  constexpr double kX[6] = {1.5, 0.0, -1.5, -1.5, 0.0, 1.5};
  constexpr double kY[6] = {1.0, 2.0, 1.0, -1.0, -2.0, -1.0};
  const int i = ((j % 6) + 6) % 6;
  return {kX[i], kY[i] * h};
}

}  // namespace

ConvexPolygon HexCluster::hexagon(int h) const {
  const std::array<Point, 6> corners = hexagon_corners(h);
  return ConvexPolygon(std::vector<Point>(corners.begin(), corners.end()));
}

std::array<Point, 6> HexCluster::hexagon_corners(int h) const {
  if (h < 0 || h >= kHexagonCount) throw std::out_of_range("hexagon index out of range");
  std::array<Point, 6> corners;
  for (int i = 0; i < 6; ++i) {
    const int id = slot_interior_[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)];
    corners[static_cast<std::size_t>(i)] =
        id >= 0 ? interior_[static_cast<std::size_t>(id)]
                : boundary_[static_cast<std::size_t>(
                      slot_boundary_[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)])];
  }
  return corners;
}

const std::array<SideRef, HexCluster::kMarkCount>& HexCluster::marks() {
  static const std::array<SideRef, kMarkCount> table = [] {
    std::array<SideRef, kMarkCount> m;
    int idx = 0;
    for (int h = 0; h < kHexagonCount; ++h)
      for (int side : {1, 3, 5}) m[static_cast<std::size_t>(idx++)] = {h, side};
    return m;
  }();
  return table;
}

HexCluster build_canonical_cluster() {
  HexCluster cluster;
  for (int i = 0; i < 6; ++i) cluster.interior_[static_cast<std::size_t>(i)] = unit_corner(i);

  for (int j = 0; j < 6; ++j) {
    const Point c = petal_center(j);
    cluster.boundary_[static_cast<std::size_t>(3 * j)] = c + unit_corner(5 + j);
    cluster.boundary_[static_cast<std::size_t>(3 * j + 1)] = c + unit_corner(j);
    cluster.boundary_[static_cast<std::size_t>(3 * j + 2)] = c + unit_corner(1 + j);
  }

  for (int i = 0; i < 6; ++i) {
    cluster.slot_interior_[0][static_cast<std::size_t>(i)] = i;
    cluster.slot_boundary_[0][static_cast<std::size_t>(i)] = -1;
  }
  for (int j = 0; j < 6; ++j) {
    const int h = j + 1;
    auto& to_interior = cluster.slot_interior_[static_cast<std::size_t>(h)];
    auto& to_boundary = cluster.slot_boundary_[static_cast<std::size_t>(h)];
    to_interior = {-1, -1, -1, (j + 1) % 6, j, -1};
    to_boundary = {3 * j + 1, 3 * j + 2, 3 * ((j + 1) % 6), -1, -1, 3 * j};
  }
  return cluster;
}

HexCluster translated(const HexCluster& cluster, Point offset) {
  HexCluster shifted = cluster;
  for (Point& p : shifted.interior_) p = p + offset;
  for (Point& p : shifted.boundary_) p = p + offset;
  return shifted;
}

std::vector<Point> cluster_lattice(int rings) {
  if (rings < 0) throw std::invalid_argument("cluster_lattice: rings must be non-negative");
  const double s3 = std::sqrt(3.0);
  const Point t1{3.0, 2.0 * s3};
  const Point t2{-1.5, 2.5 * s3};
  const auto at = [&](int m, int n) { return static_cast<double>(m) * t1 + static_cast<double>(n) * t2; };

  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(1 + 3 * rings * (rings + 1)));
  out.push_back(at(0, 0));
  constexpr std::array<std::array<int, 2>, 6> dirs = {{{-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}}};
  for (int r = 1; r <= rings; ++r) {
    int m = r;
    int n = 0;
    for (const auto& d : dirs)
      for (int step = 0; step < r; ++step) {
        out.push_back(at(m, n));
        m += d[0];
        n += d[1];
      }
  }
  return out;
}

HexCluster perturb_cluster(const HexCluster& cluster, const PerturbationPlan& plan,
                           const SolverConfig& cfg) {
  if (plan.magnitude < 0.0 || plan.magnitude > 0.01)
    throw std::invalid_argument("perturb_cluster: magnitude must lie in [0, 0.01]");
  std::array<bool, 6> pinned{};
  for (int id : plan.designated) {
    if (id < 0 || id >= HexCluster::kInteriorCount || pinned[static_cast<std::size_t>(id)])
      throw std::invalid_argument("perturb_cluster: designated ids must be distinct interior ids");
    pinned[static_cast<std::size_t>(id)] = true;
  }

  HexCluster result = cluster;
  for (int k = 0; k < 3; ++k) {
    const int id = plan.designated[static_cast<std::size_t>(k)];
    result.set_interior_vertex(id, cluster.interior_vertices()[static_cast<std::size_t>(id)] +
                                       plan.magnitude * plan.directions[static_cast<std::size_t>(k)]);
  }

  std::vector<int> free_ids;
  for (int id = 0; id < HexCluster::kInteriorCount; ++id)
    if (!pinned[static_cast<std::size_t>(id)]) free_ids.push_back(id);

  const auto residual_fn = [&result, &free_ids](std::span<const double> x) {
    HexCluster trial = result;
    for (std::size_t k = 0; k < free_ids.size(); ++k)
      trial.set_interior_vertex(free_ids[k], {x[2 * k], x[2 * k + 1]});
    std::vector<double> f(6);
    for (int petal = 1; petal <= 6; ++petal) {
      const std::array<Point, 6> corners = trial.hexagon_corners(petal);
      f[static_cast<std::size_t>(petal - 1)] = signed_area(std::span(corners)) - kHexagonArea;
    }
    return f;
  };

  std::vector<double> x0;
  for (int id : free_ids) {
    const Point p = result.interior_vertices()[static_cast<std::size_t>(id)];
    x0.push_back(p.x);
    x0.push_back(p.y);
  }

  SolveReport report;
  try {
    report = gauss_newton_min_norm(residual_fn, x0, cfg);
  } catch (const NonConvergenceError& e) {
    throw PerturbationFailureError(std::string("perturb_cluster: ") + e.what());
  } catch (const RankDeficiencyError& e) {
    throw PerturbationFailureError(std::string("perturb_cluster: ") + e.what());
  }
  for (std::size_t k = 0; k < free_ids.size(); ++k)
    result.set_interior_vertex(free_ids[k], {report.solution[2 * k], report.solution[2 * k + 1]});

  for (int h = 0; h < HexCluster::kHexagonCount; ++h) {
    try {
      (void)result.hexagon(h);
    } catch (const DegenerateInputError&) {
      throw PerturbationFailureError("perturb_cluster: hexagon " + std::to_string(h) +
                                     " lost convexity");
    }
  }
  return result;
}

std::array<MarkedSideFigure, HexCluster::kMarkCount> marked_side_figures(const HexCluster& cluster) {
  std::array<MarkedSideFigure, HexCluster::kMarkCount> out;
  const auto& refs = HexCluster::marks();
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const ConvexPolygon hexagon = cluster.hexagon(refs[i].hexagon);
    out[i] = {refs[i], side_figure(hexagon, refs[i].side)};
  }
  return out;
}

}  // namespace fairtile
