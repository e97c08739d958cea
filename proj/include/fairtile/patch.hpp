#pragma once

#include <cstdint>
#include <vector>

#include "fairtile/cluster.hpp"
#include "fairtile/hexsplit.hpp"

namespace fairtile {

class GenerationFailureError : public Error {
 public:
  using Error::Error;
};

struct PentagonRecord {
  std::int64_t id = 0;
  int cluster_index = 0;
  int hexagon_index = 0;   // 0 central, 1..6 petals
  int pentagon_index = 0;  // 0..2 within the hexagon
  int marked_side = kMarkedPentagonSide;
  ConvexPolygon polygon;
};

struct GenerationParams {
  int rings = 1;
  double epsilon0 = 5e-3;
  double rho = 0.7;
  std::uint64_t seed = 0;
  double delta_sep = 1e-9;
  double tol_residual = 1e-12;
};

inline int cluster_count_for_rings(int rings) { return 1 + 3 * rings * (rings + 1); }

struct Tiling {
  std::vector<PentagonRecord> pentagons;  // sorted by id
  GenerationParams generation;
  double area_target = kPentagonArea;
  double perimeter_target = kPentagonPerimeter;

  int cluster_count() const { return cluster_count_for_rings(generation.rings); }
};

// Builds the pentagon patch: lays out clusters center-out, perturbs cluster k
// with magnitude epsilon0 * rho^k (retrying with fresh direction draws until
// the new pentagons and marked side figures separate from everything accepted
// so far by at least delta_sep), then splits all seven hexagons. Deterministic
// for fixed arguments. 21 pentagons per cluster, ids assigned in generation
// order.
Tiling generate_patch(int rings, double epsilon0, double rho, std::uint64_t seed,
                      const SolverConfig& cfg = {}, double delta_sep = 1e-9);

// The same layout with zero perturbation: every hexagon is regular and every
// pentagon congruent. Baseline for closeness checks and the negative control
// for incongruence.
Tiling reference_patch(int rings);

}  // namespace fairtile
