#pragma once

#include <cstdint>

namespace hyperroute {

/// Cost model for entanglement-assisted routing on an n x n array.
/// mean_pair_distance defaults to the calibrated asymptotic mean Manhattan
/// distance 2n/3; exact_mean_manhattan(n) gives 2(n^2-1)/(3n).
struct EntanglementConfig {
  int n = 16;           // grid side, N = n^2
  int d_ent = 16;       // entanglement-overlay degree
  long long k = 0;      // distribution parallelism; 0 means default k = N
  double mean_pair_distance = 0.0;  // 0 means default 2n/3

  int num_vertices() const { return n * n; }
  void validate() const;
};

double exact_mean_manhattan(int n);

/// Median teleportation routing depth (matching depth on a random
/// d_ent-regular overlay, C + D accounting) over 20 random permutations.
double teleport_route_depth(int num_vertices, int d_ent, std::uint64_t seed);

/// ceil((d_ent N / 2) * mean_distance / k); with the defaults this is
/// ceil(d_ent * n / 3).
long long distribution_cost(const EntanglementConfig& config);

/// Physical grid routing baseline ceil(3n/2).
long long physical_depth_baseline(int n);

/// Calibrated overlay routing-depth predictor round(2 log2 N / 3).
int predicted_route_depth(int num_vertices);

struct CrossoverReport {
  long long t_dist = 0;
  long long t_phys = 0;
  double t_route = 0;
  double r_break = 0;     // t_dist / (t_phys - t_route)
  bool never_pays = false;
};

CrossoverReport crossover_rounds(int num_vertices, int d_ent, double t_route,
                                 long long t_phys);

struct HybridTeleportReport {
  double fraction_teleported = 0.0;
  double t_teleport = 0.0;
  double t_cleanup = 0.0;
  double t_total = 0.0;       // max-phase composition (teleportation is
                              // LOCC and runs alongside the physical phase)
  double t_sequential = 0.0;  // sum of the phases
  double speedup_vs_physical = 0.0;
};

/// Atoms displaced more than `threshold` grid steps teleport over a
/// d_ent-regular overlay; the rest are cleaned up locally on the grid by
/// greedy displacement matching. Averaged over a handful of seeded trials.
HybridTeleportReport hybrid_teleport(int n, int threshold, std::uint64_t seed,
                                     int d_ent = 16, int trials = 5);

}  // namespace hyperroute
