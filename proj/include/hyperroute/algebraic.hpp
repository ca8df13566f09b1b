#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperroute/graphs.hpp"
#include "hyperroute/routing.hpp"
#include "hyperroute/spectral.hpp"

namespace hyperroute {

/// A named degree-2d generator family on Z_n^2. One generator per +/- pair.
///   qr:       (g, g^2 mod n) for g = 1..d, n prime
///   margulis: (1,0), (0,1), (1,1), (1,-1)
///   random:   d uniform nonzero pairs, derived from (seed, n)
struct GeneratorFamily {
  std::string name = "qr";
  int degree = 8;  // 2d
  std::uint64_t seed = 0;

  std::vector<std::pair<int, int>> generators(int n) const;
};

/// Default master seed for the random generator family (the shipped
/// instance of the published random-Cayley sweep).
inline constexpr std::uint64_t kRandomFamilyDefaultSeed = 559;

/// Cayley host: the graph plus the structure needed for word-geodesic
/// routing and translation search.
struct CayleyGraph {
  int n = 0;
  std::vector<std::pair<int, int>> generators;  // one per +/- pair
  WeightedGraph graph;

  int vertex(int a, int b) const { return ((a % n + n) % n) * n + ((b % n + n) % n); }
  int translate(int v, int c) const {
    return vertex(v / n + c / n, v % n + c % n);
  }
};

CayleyGraph make_cayley(int n, const GeneratorFamily& family);

/// All n^2 adjacency eigenvalues via character sums
/// lambda_(a,b) = sum_j 2 cos(2 pi (a g1_j + b g2_j) / n); no eigensolve.
std::vector<double> cayley_character_eigenvalues(int n,
    const std::vector<std::pair<int, int>>& generators);

SpectralSummary cayley_spectrum_characters(int n,
    const std::vector<std::pair<int, int>>& generators);

struct BarrierRow {
  int n = 0;
  double lambda2 = 0.0;
  double lambda_star = 0.0;
  double beta = 0.0;           // lambda2 / 2d (the barrier concerns lambda2)
  double ramanujan_ratio = 0;  // lambda* / (2 sqrt(d-1))
  bool ramanujan = false;
};

/// Sweep of the abelian Alon-Boppana barrier for one family.
std::vector<BarrierRow> abelian_barrier_scan(int degree, const std::vector<int>& n_list,
                                             const GeneratorFamily& family);

enum class AffineMode { kTranslation, kAffineSampled };

struct AffineSearchResult {
  int best_shift = 0;            // c, encoded a*n+b
  int best_congestion = 0;       // worst-edge congestion under the best map
  int best_cd = 0;               // C + D under the best map
  double median_random_cd = 0;   // uniform-sigma baseline over the trial set
  double median_best_cd = 0;     // best map per trial, median C + D
};

/// Scatter walks for sigma(v) = v + c: one shortest generator word for c,
/// applied as a translate at every start vertex (all scatter paths share a
/// length and edge profile, the translation's variance-free property).
std::vector<std::vector<int>> translation_scatter_walks(const CayleyGraph& cg,
                                                        const PathOracle& oracle, int c);

/// Two-phase C and D for sigma(v) = v + c against a target permutation.
std::pair<int, int> translation_route_cd(const CayleyGraph& cg, const PathOracle& oracle,
                                         const EdgeIndex& edges, int c,
                                         const std::vector<int>& pi);

/// Exhaustive translation search (all n^2 shifts) or sampled affine search
/// (m invertible matrices plus shifts, identity excluded). For each trial
/// permutation the best map is selected by worst-edge congestion, then
/// C + D; medians across the trial set are reported.
AffineSearchResult affine_sigma_search(const CayleyGraph& cg, const std::vector<int>& pi,
                                       AffineMode mode, int samples = 200,
                                       std::uint64_t seed = 0);

struct AffineComparison {
  double median_random = 0;
  double median_affine = 0;
  double median_translation = 0;
};

/// Shared-permutation comparison harness over `trials` random targets.
AffineComparison affine_comparison(const CayleyGraph& cg, int trials, int samples,
                                   std::uint64_t seed);

}  // namespace hyperroute
