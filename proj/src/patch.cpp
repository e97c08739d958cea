#include "fairtile/patch.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace fairtile {

namespace {

constexpr int kRetryBudget = 20;

struct SortedFeatures {
  std::array<double, 5> lengths;
  std::array<double, 5> angles;
};

SortedFeatures sorted_features(const ConvexPolygon& pentagon) {
  SortedFeatures f;
  const std::vector<double> angles = interior_angles(pentagon);
  for (int i = 0; i < 5; ++i) {
    f.lengths[static_cast<std::size_t>(i)] = distance(pentagon[i], pentagon[(i + 1) % 5]);
    f.angles[static_cast<std::size_t>(i)] = angles[static_cast<std::size_t>(i)];
  }
  std::sort(f.lengths.begin(), f.lengths.end());
  std::sort(f.angles.begin(), f.angles.end());
  return f;
}

// Lower bound for congruence_distance; any vertex bijection pays at least the
// sorted-sequence gap, so pairs separated here need no alignment scan.
double feature_gap(const SortedFeatures& a, const SortedFeatures& b) {
  double gap = 0.0;
  for (int i = 0; i < 5; ++i) {
    gap = std::max(gap, std::abs(a.lengths[static_cast<std::size_t>(i)] -
                                 b.lengths[static_cast<std::size_t>(i)]));
    gap = std::max(gap, std::abs(a.angles[static_cast<std::size_t>(i)] -
                                 b.angles[static_cast<std::size_t>(i)]));
  }
  return gap;
}

struct Candidate {
  std::vector<PentagonRecord> records;
  std::vector<SortedFeatures> features;
  std::vector<SideFigure> figures;
};

Candidate split_cluster(const HexCluster& cluster, int cluster_index, const SolverConfig& cfg) {
  Candidate candidate;
  candidate.records.reserve(21);
  candidate.features.reserve(21);
  for (int h = 0; h < HexCluster::kHexagonCount; ++h) {
    FairSplit split = [&] {
      try {
        return split_hexagon(cluster.hexagon(h), cfg);
      } catch (const SplitFailureError& e) {
        throw SplitFailureError("cluster " + std::to_string(cluster_index) + ", hexagon " +
                                    std::to_string(h) + ": " + e.what(),
                                e.report());
      } catch (const NeighborhoodExceededError& e) {
        throw NeighborhoodExceededError("cluster " + std::to_string(cluster_index) + ", hexagon " +
                                        std::to_string(h) + ": " + e.what());
      }
    }();
    for (int p = 0; p < 3; ++p) {
      const std::int64_t id = static_cast<std::int64_t>(cluster_index) * 21 + h * 3 + p;
      candidate.records.push_back({id, cluster_index, h, p,
                                   split.marked_side[static_cast<std::size_t>(p)],
                                   split.pentagons[static_cast<std::size_t>(p)]});
      candidate.features.push_back(sorted_features(split.pentagons[static_cast<std::size_t>(p)]));
    }
  }
  // Acceptance separates exactly the figures the verifier will recompute: the
  // marked-side figures of the pentagons themselves.
  for (const PentagonRecord& record : candidate.records)
    candidate.figures.push_back(side_figure(record.polygon, record.marked_side));
  return candidate;
}

bool separated(const Candidate& candidate, const std::vector<PentagonRecord>& accepted,
               const std::vector<SortedFeatures>& accepted_features,
               const std::vector<SideFigure>& accepted_figures, double delta_sep) {
  const std::size_t n = candidate.records.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (feature_gap(candidate.features[i], candidate.features[j]) >= delta_sep) continue;
      if (congruence_distance(candidate.records[i].polygon, candidate.records[j].polygon) < delta_sep)
        return false;
    }
    for (std::size_t j = 0; j < accepted.size(); ++j) {
      if (feature_gap(candidate.features[i], accepted_features[j]) >= delta_sep) continue;
      if (congruence_distance(candidate.records[i].polygon, accepted[j].polygon) < delta_sep)
        return false;
    }
  }
  for (std::size_t i = 0; i < candidate.figures.size(); ++i) {
    for (std::size_t j = i + 1; j < candidate.figures.size(); ++j)
      if (side_figure_distance(candidate.figures[i], candidate.figures[j]) < delta_sep) return false;
    for (const SideFigure& figure : accepted_figures)
      if (side_figure_distance(candidate.figures[i], figure) < delta_sep) return false;
  }
  return true;
}

}  // namespace

Tiling generate_patch(int rings, double epsilon0, double rho, std::uint64_t seed,
                      const SolverConfig& cfg, double delta_sep) {
  if (rings < 0) throw std::invalid_argument("generate_patch: rings must be non-negative");
  if (!(epsilon0 > 0.0) || epsilon0 > 0.01)
    throw std::invalid_argument("generate_patch: epsilon0 must lie in (0, 0.01]");
  if (!(rho > 0.0) || !(rho < 1.0))
    throw std::invalid_argument("generate_patch: rho must lie in (0, 1)");
  if (!(delta_sep > 0.0)) throw std::invalid_argument("generate_patch: delta_sep must be positive");

  const std::vector<Point> translations = cluster_lattice(rings);
  const double last_magnitude =
      epsilon0 * std::pow(rho, static_cast<double>(translations.size() - 1));
  if (last_magnitude < 1e3 * delta_sep)
    throw GenerationFailureError(
        "generate_patch: shrinking schedule underflows the separation threshold at rings = " +
        std::to_string(rings) + "; reduce rings or delta_sep");

  std::mt19937_64 rng(seed);
  const auto unit_direction = [&rng] {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double angle = 2.0 * std::numbers::pi * u;
    return Point{std::cos(angle), std::sin(angle)};
  };

  const HexCluster canonical = build_canonical_cluster();
  std::vector<PentagonRecord> accepted;
  std::vector<SortedFeatures> accepted_features;
  std::vector<SideFigure> accepted_figures;
  accepted.reserve(translations.size() * 21);

  for (std::size_t k = 0; k < translations.size(); ++k) {
    const HexCluster base = translated(canonical, translations[k]);
    const double magnitude = epsilon0 * std::pow(rho, static_cast<double>(k));
    bool placed = false;
    for (int attempt = 0; attempt < kRetryBudget && !placed; ++attempt) {
      PerturbationPlan plan;
      plan.magnitude = magnitude;
      for (Point& direction : plan.directions) direction = unit_direction();
      HexCluster perturbed = base;
      try {
        perturbed = perturb_cluster(base, plan, cfg);
      } catch (const PerturbationFailureError&) {
        continue;  // retry with the next direction draw
      }

      Candidate candidate = split_cluster(perturbed, static_cast<int>(k), cfg);
      if (!separated(candidate, accepted, accepted_features, accepted_figures, delta_sep)) continue;

      for (auto& record : candidate.records) accepted.push_back(std::move(record));
      accepted_features.insert(accepted_features.end(), candidate.features.begin(),
                               candidate.features.end());
      accepted_figures.insert(accepted_figures.end(), candidate.figures.begin(),
                              candidate.figures.end());
      placed = true;
    }
    if (!placed)
      throw GenerationFailureError("generate_patch: cluster " + std::to_string(k) +
                                   " exhausted its retry budget of " + std::to_string(kRetryBudget));
  }

  Tiling tiling;
  tiling.pentagons = std::move(accepted);
  tiling.generation = {rings, epsilon0, rho, seed, delta_sep, cfg.tol_residual};
  return tiling;
}

Tiling reference_patch(int rings) {
  const std::vector<Point> translations = cluster_lattice(rings);
  const HexCluster canonical = build_canonical_cluster();
  const SolverConfig cfg;

  Tiling tiling;
  tiling.pentagons.reserve(translations.size() * 21);
  for (std::size_t k = 0; k < translations.size(); ++k) {
    const HexCluster cluster = translated(canonical, translations[k]);
    for (int h = 0; h < HexCluster::kHexagonCount; ++h) {
      const FairSplit split = split_hexagon(cluster.hexagon(h), cfg);
      for (int p = 0; p < 3; ++p) {
        const std::int64_t id = static_cast<std::int64_t>(k) * 21 + h * 3 + p;
        tiling.pentagons.push_back({id, static_cast<int>(k), h, p,
                                    split.marked_side[static_cast<std::size_t>(p)],
                                    split.pentagons[static_cast<std::size_t>(p)]});
      }
    }
  }
  tiling.generation = {rings, 0.0, 0.7, 0, 1e-9, cfg.tol_residual};
  return tiling;
}

}  // namespace fairtile
