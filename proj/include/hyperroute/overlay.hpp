#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperroute/graphs.hpp"

namespace hyperroute {

struct OverlayConfig {
  int num_vertices = 0;
  int k0 = 1;        // per-layer selective-transfer capacity (swaps/step)
  int layers = 1;    // L
  int d0 = 8;        // per-layer overlay degree
  double gamma = 0;  // crosstalk coefficient in [0, 1]

  void validate() const;
};

/// Total depth when each matching step costs ceil(N / 2k) sub-steps.
long long overlay_depth(long long routing_steps, int num_vertices, int capacity);

/// Classification against the capacity-depth tradeoff thresholds.
std::string capacity_regime(double k, int num_vertices);

struct MultilayerRow {
  int layers = 0;
  double mean_beta = 0.0;
  double mean_lambda2 = 0.0;
  double sqrt_law_ratio = 0.0;  // beta_L * sqrt(L) / beta_1
  bool all_ramanujan = false;   // lambda2 <= 2 sqrt(L d0 - 1) on every trial
};

/// Mean spectral ratio of L-layer unions of independent random d0-regular
/// graphs, over `trials` seeds per L.
std::vector<MultilayerRow> multilayer_beta_experiment(int num_vertices, int d0,
                                                      const std::vector<int>& layer_list,
                                                      int trials, std::uint64_t seed);

struct EffectiveCapacity {
  double direct = 0.0;        // L k0 / (1 + 2 gamma (1 - 1/L))
  double checkerboard = 0.0;  // ceil(L/2) * k0
  double best = 0.0;
};

EffectiveCapacity effective_capacity(int layers, int k0, double gamma);

struct SpeedupRow {
  std::string model;
  double d_eff = 0.0;
  double beta = 0.0;
  double median_depth = 0.0;
  double speedup = 0.0;
};

/// Median two-phase routing depth on L-layer unions vs the 2D grid
/// expansion of the same n x n array, same permutation set.
std::vector<SpeedupRow> end_to_end_overlay_speedup(int n, const std::vector<int>& layer_list,
                                                   int d0, int trials, std::uint64_t seed);

/// Union of L independent random d0-regular layers (seed-derived).
WeightedGraph build_union_overlay(int num_vertices, int d0, int layers,
                                  std::uint64_t seed);

}  // namespace hyperroute
