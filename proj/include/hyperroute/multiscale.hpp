#pragma once

#include <cstdint>
#include <vector>

#include "hyperroute/graphs.hpp"
#include "hyperroute/routing.hpp"
#include "hyperroute/spectral.hpp"

namespace hyperroute {

struct VoltageSearchResult {
  long long total = 0;
  long long ramanujan_count = 0;
  double fraction = 0.0;
  double best_beta = 1.0;
  double mean_beta = 0.0;
  std::vector<int> best_assignment;
};

enum class SearchMode { kExhaustive, kSample };

/// Fraction of Z_k voltage assignments whose lift passes the hypergraph
/// Ramanujan band, plus the best spectral ratio found. Exhaustive mode is
/// limited to k^E <= 1e6 assignments.
VoltageSearchResult search_ramanujan_voltages(const Hypergraph& base, int k,
                                              SearchMode mode, int samples,
                                              std::uint64_t seed,
                                              LiftConvention convention);

struct TowerLevel {
  Hypergraph h;
  WeightedGraph expansion;
  SpectralSummary spec;
  std::vector<int> voltages;  // voltages that produced this level (empty at base)
};

/// Tower of k-fold coverings H_0 <- H_1 <- ... <- H_L.
struct TowerSpec {
  int k = 2;
  LiftConvention convention = LiftConvention::kBaseShift;
  std::vector<TowerLevel> levels;

  double beta_bar() const;
  int top_vertices() const { return levels.back().h.num_vertices; }
};

TowerSpec build_tower(const Hypergraph& base, int k,
                      const std::vector<std::vector<int>>& voltages_per_level,
                      LiftConvention convention = LiftConvention::kBaseShift);

/// The shipped example tower: Fano base, two 2-fold lifts with pinned
/// voltages reproducing the published level spectra (beta 0.167 / 0.500 /
/// 0.859).
TowerSpec build_fano_example_tower();

/// Generic tower: at each level, search voltage assignments (exhaustive
/// when k^E is small, sampled otherwise) and lift with the best one found.
TowerSpec build_searched_tower(const Hypergraph& base, int k, int levels,
                               int samples, std::uint64_t seed,
                               LiftConvention convention = LiftConvention::kBaseShift);

struct TowerLevelStats {
  int level = 0;
  int num_vertices = 0;
  double beta = 0.0;
  double median_depth = 0.0;  // median C + D over random permutations
  double depth_ratio = 0.0;   // median_depth / log2 N
};

std::vector<TowerLevelStats> tower_level_stats(const TowerSpec& tower, int trials,
                                               std::uint64_t seed);

struct TowerRouteResult {
  std::vector<int> per_level_depth;  // scheduled matchings attributed per stage
  int total_depth = 0;
  double depth_over_log2n = 0.0;
  double cross_fiber_fraction_expected = 0.0;  // 1 - k/N at the top covering
  double cross_fiber_fraction_measured = 0.0;
  bool realized = false;
};

/// Coarse-to-fine recursive routing on the top level: stage l moves every
/// atom into the fiber of its target over level l, finishing with the exact
/// permutation. Realizes pi exactly.
TowerRouteResult tower_route(const TowerSpec& tower, const std::vector<int>& pi,
                             std::uint64_t seed);

/// (L log2 k + log2 N0) / (1 - beta_bar).
double tower_prediction(int levels, int k, int base_vertices, double beta_bar);

struct HierarchySpec {
  int n = 16;       // grid side
  int b = 4;        // block size
  int d_level = 4;  // per-level block-overlay degree
  int d_flat = 8;   // flat-baseline overlay degree
  int trials = 12;

  int levels() const;  // ceil(log_b n)
  void validate() const;
};

struct HierarchyLevelReport {
  int level = 0;          // 1..L; the last one is the intra-block level
  int graph_vertices = 0;
  double beta = 0.0;          // mean over trials
  double model_depth = 0.0;   // log2(b^2) / (1 - beta)
  double measured_cd = 0.0;   // median routed C + D on one sampled overlay
};

struct HierarchyReport {
  std::vector<HierarchyLevelReport> levels;
  double t_hier = 0.0;
  double flat_beta = 0.0;
  double t_flat = 0.0;  // 2 log2 N / (1 - flat_beta)
  double ratio = 0.0;
  double beta_bar = 0.0;
  double t_tower = 0.0;
  double tower_gap = 0.0;  // |t_hier - t_tower| / t_tower
};

/// Block-decomposition depth model: every level contributes
/// log2(b^2)/(1 - beta) with beta measured on a random d_level-regular
/// overlay of the level's block graph (the finest level is the b x b
/// intra-block overlay); the flat baseline is Valiant on a random
/// d_flat-regular overlay of the whole grid.
HierarchyReport hierarchical_route(const HierarchySpec& spec, std::uint64_t seed);

/// Boundary-only transfer capacity scale sqrt(N) log2 N.
double boundary_capacity(int num_vertices);

/// Full-block-swap capacity at any level (counting identity N/2).
double per_level_full_swap_capacity(int num_vertices);

}  // namespace hyperroute
