#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "fairtile/geometry.hpp"
#include "fairtile/nlsolve.hpp"

namespace fairtile {

// Area of a regular hexagon of side 1; every cluster hexagon keeps this area.
inline const double kHexagonArea = 3.0 * std::sqrt(3.0) / 2.0;

struct SideRef {
  int hexagon = 0;
  int side = 0;
};

class PerturbationFailureError : public Error {
 public:
  using Error::Error;
};

// Seven hexagons arranged as a flower: one central hexagon surrounded by six
// petals. The 18-gon outline and the petal-petal corners are fixed; the six
// central corners are the shared interior vertices. Hexagons are materialized
// on demand from the shared vertex storage, so moving an interior vertex
// moves it in every incident hexagon.
//
// Each hexagon carries a local counterclockwise vertex numbering chosen so
// that local sides 1, 3, 5 (the marked sides) always touch at least one
// interior vertex; petal j's local vertex i sits at direction (i+j)*60
// degrees from its center. Side 3 of every petal is the side shared with the
// central hexagon.
class HexCluster {
 public:
  static constexpr int kHexagonCount = 7;   // index 0 central, 1..6 petals
  static constexpr int kInteriorCount = 6;
  static constexpr int kBoundaryCount = 18;
  static constexpr int kMarkCount = 21;

  ConvexPolygon hexagon(int h) const;
  std::array<Point, 6> hexagon_corners(int h) const;
  const std::array<Point, kInteriorCount>& interior_vertices() const { return interior_; }
  const std::array<Point, kBoundaryCount>& boundary() const { return boundary_; }

  // Interior-vertex id at hexagon slot (h, i), or -1 for a fixed boundary slot.
  int interior_id(int h, int slot) const {
    return slot_interior_[static_cast<std::size_t>(h)][static_cast<std::size_t>(slot)];
  }

  void set_interior_vertex(int id, Point p) { interior_[static_cast<std::size_t>(id)] = p; }

  // The 21 marked sides, three pairwise non-adjacent sides per hexagon,
  // in (hexagon, side) order.
  static const std::array<SideRef, kMarkCount>& marks();

 private:
  friend HexCluster build_canonical_cluster();
  friend HexCluster translated(const HexCluster& cluster, Point offset);
  HexCluster() = default;

  std::array<Point, kInteriorCount> interior_{};
  std::array<Point, kBoundaryCount> boundary_{};
  std::array<std::array<int, 6>, 7> slot_interior_{};
  std::array<std::array<int, 6>, 7> slot_boundary_{};
};

HexCluster build_canonical_cluster();

HexCluster translated(const HexCluster& cluster, Point offset);

// Cluster translations m*T1 + n*T2 with T1 = (3, 2*sqrt(3)) and
// T2 = (-3/2, 5*sqrt(3)/2), enumerated center-out ring by ring in a fixed
// spiral order. Ring r contributes max(1, 6r) clusters.
std::vector<Point> cluster_lattice(int rings);

struct PerturbationPlan {
  double magnitude = 0.0;
  std::array<Point, 3> directions{};        // unit displacement directions
  std::array<int, 3> designated = {0, 2, 4};  // interior-vertex ids of A, B, C
};

// Displaces the designated interior vertices by magnitude * direction, keeps
// the boundary and the incidence structure untouched, and re-solves the
// remaining interior vertices so that all seven hexagon areas equal
// kHexagonArea (the six petal areas are the independent constraints; the
// central area is implied by the fixed outline).
HexCluster perturb_cluster(const HexCluster& cluster, const PerturbationPlan& plan,
                           const SolverConfig& cfg = {});

struct MarkedSideFigure {
  SideRef ref;
  SideFigure figure;
};

std::array<MarkedSideFigure, HexCluster::kMarkCount> marked_side_figures(const HexCluster& cluster);

}  // namespace fairtile
