#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperroute/graphs.hpp"
#include "hyperroute/routing.hpp"

namespace hyperroute {

enum class DisplacementMetric { kGridManhattan, kOverlayBfs };

/// Atom positions against a target permutation with the squared-displacement
/// potential Phi maintained incrementally (and recomputable for checking).
class DisplacementState {
 public:
  /// grid_side > 0 selects the grid Manhattan metric on an n x n array;
  /// otherwise distances are BFS distances in `overlay`.
  DisplacementState(const WeightedGraph& overlay, const std::vector<int>& targets,
                    DisplacementMetric metric, int grid_side = 0);

  int num_vertices() const { return n_; }
  double phi() const { return phi_; }
  double phi_recomputed() const;
  bool placed() const { return phi_ == 0; }
  int distance(int u, int v) const;
  int atom_at(int vertex) const { return occ_[vertex]; }
  int target_of(int atom) const { return targets_[atom]; }
  int rho(int atom) const { return distance(pos_[atom], targets_[atom]); }
  void swap_vertices(int u, int v);

 private:
  int n_ = 0;
  int grid_side_ = 0;
  std::vector<int> pos_, occ_, targets_;
  std::vector<std::uint16_t> bfs_dist_;  // overlay metric only
  double phi_ = 0;
};

struct GreedyStepResult {
  std::vector<std::pair<int, int>> matching;
  double delta_phi = 0.0;
};

/// One sort-by-gain greedy step: scan all overlay edges, sort by squared
/// displacement reduction (ties by edge index), add vertex-disjoint swaps
/// with strictly positive gain, and apply them.
GreedyStepResult greedy_matching_step(DisplacementState& state,
                                      const std::vector<std::array<int, 3>>& edges);

struct StallReport {
  int steps_to_stall = 0;
  double phi0 = 0.0;
  double phi_stall = 0.0;
  double stall_fraction = 0.0;  // phi_stall / phi0
  double step0_delta = 0.0;     // first-step fractional reduction
  bool placed = false;
  std::vector<double> phi_history;
  int monotonicity_violations = 0;
};

StallReport run_greedy_until_stall(int n, int d, std::uint64_t seed,
                                   DisplacementMetric metric = DisplacementMetric::kGridManhattan);

struct ConcentrationReport {
  double alpha_hat = 0.0;   // empirical tail fraction
  long long samples = 0;    // greedy steps observed (all monotone-checked)
  int bins_used = 0;
  bool widened = false;     // bins were merged for lack of samples
  long long monotonicity_violations = 0;
};

/// Bins greedy steps by Phi/Phi0 decile and estimates
/// P[dPhi < 0.5 E(dPhi | bin)].
ConcentrationReport concentration_check(int n, int d, int trials, std::uint64_t seed);

struct HybridReport {
  double t_stall = 0.0;
  double stall_fraction = 0.0;
  double beta = 0.0;            // measured overlay spectral ratio
  double t_residual_model = 0.0;  // stall_fraction * 2 log2 N / (1 - beta)
  double t_residual_measured = 0.0;  // routed C + D of the residual
  double t_hybrid = 0.0;        // t_stall + t_residual_model
  double t_pure = 0.0;          // 2 log2 N / (1 - beta)
  double speedup = 0.0;         // t_pure / t_hybrid
};

/// Greedy until stall, then Valiant on the residual. The speedup compares
/// the energy-weighted Valiant cost model for the residual phase against
/// the same model for a cold start; the routed residual C + D is also
/// measured and reported.
HybridReport hybrid_greedy_valiant(int n, int d, std::uint64_t seed, int trials = 5);

struct OverlayFamily {
  std::vector<std::string> names;
  std::vector<WeightedGraph> graphs;
  double eta = 0.5;
};

/// Random d=4, random d=8 and the complete graph on the same vertex set.
OverlayFamily default_overlay_family(int num_vertices, std::uint64_t seed);

struct MwReport {
  double t_mw = 0.0;
  double t_best = 0.0;     // best completing single-overlay run
  double competitive_ratio = 0.0;
  bool completed = false;  // step cap not hit
  std::vector<double> final_weights;
};

/// Multiplicative-weights overlay selection: sample an overlay per step
/// (probability proportional to weight), take its greedy step, update the
/// weight by exp(eta * dPhi/Phi). Runs to placement or 50 log2 N steps.
MwReport mw_overlay_selection(const OverlayFamily& family, const std::vector<int>& pi,
                              double eta, std::uint64_t seed, int grid_side);

}  // namespace hyperroute
