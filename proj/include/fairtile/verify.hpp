#pragma once

#include <cstdint>
#include <limits>

#include "fairtile/patch.hpp"

namespace fairtile {

struct VerifyConfig {
  double tol_area = 1e-9;
  double tol_perimeter = 1e-9;
  double delta_sep = 1e-9;         // required separation for incongruence
  double mu_max = 0.05;            // admissible angle deviation, radians
  double eps_max = 0.05;           // admissible closeness to the reference
  double overlap_band = 1e-12;     // separating-axis margin treated as touching
  double tol_total_area_rel = 1e-8;
};

struct IdPair {
  std::int64_t first = -1;
  std::int64_t second = -1;
};

// Fields not measured by a given check keep their defaults; verify_all fills
// everything (closeness only when a reference is supplied).
struct VerifyReport {
  bool pass = true;
  double max_area_dev = 0.0;
  double max_perimeter_dev = 0.0;
  double min_congruence_distance = std::numeric_limits<double>::infinity();
  IdPair min_congruence_pair;
  double min_side_figure_distance = std::numeric_limits<double>::infinity();
  IdPair min_side_figure_pair;
  double max_angle_dev = 0.0;
  double max_closeness = 0.0;
  bool overlap_found = false;
  IdPair overlap_pair;
  double total_area_relative_error = 0.0;
};

// Every pentagon's area and perimeter against the tiling targets.
VerifyReport verify_fairness(const Tiling& t, const VerifyConfig& cfg = {});

// Minimum pairwise congruence distance over all pentagons and, separately,
// over all recorded marked side figures; pass requires both >= delta_sep.
VerifyReport verify_incongruence(const Tiling& t, const VerifyConfig& cfg = {});

// Convexity/angle contract, pairwise interior disjointness, and total area
// against cluster_count * 7 hexagon areas.
VerifyReport verify_geometry(const Tiling& t, const VerifyConfig& cfg = {});

// Max eps_closeness between pentagons matched by id. Throws when the layouts
// differ (rings or pentagon count mismatch).
VerifyReport verify_closeness(const Tiling& t, const Tiling& reference, const VerifyConfig& cfg = {});

// All applicable checks combined; reference may be null.
VerifyReport verify_all(const Tiling& t, const Tiling* reference, const VerifyConfig& cfg = {});

}  // namespace fairtile
