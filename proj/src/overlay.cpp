#include "hyperroute/overlay.hpp"

#include <algorithm>
#include <cmath>

#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"
#include "hyperroute/routing.hpp"
#include "hyperroute/spectral.hpp"

namespace hyperroute {

void OverlayConfig::validate() const {
  if (k0 < 1) throw ParameterError("overlay config: k0 >= 1 required");
  if (layers < 1) throw ParameterError("overlay config: L >= 1 required");
  if (gamma < 0.0 || gamma > 1.0)
    throw ParameterError("overlay config: gamma in [0, 1] required");
}

long long overlay_depth(long long routing_steps, int num_vertices, int capacity) {
  if (routing_steps < 0 || capacity < 1)
    throw ParameterError("overlay_depth: T_R >= 0 and k >= 1 required");
  const long long substeps = (num_vertices + 2LL * capacity - 1) / (2LL * capacity);
  return routing_steps * substeps;
}

std::string capacity_regime(double k, int num_vertices) {
  const double n = num_vertices;
  if (k >= n / 2.0) return "Optimal, O(log N)";
  if (k >= n / std::log2(n)) return "Near-optimal, O(log^2 N)";
  if (k >= std::sqrt(n)) return "Matches grid AOD, O(sqrt(N) log N)";
  return "Worse than grid, O(N log N)";
}

WeightedGraph build_union_overlay(int num_vertices, int d0, int layers,
                                  std::uint64_t seed) {
  std::vector<WeightedGraph> gs;
  gs.reserve(layers);
  for (int l = 0; l < layers; ++l)
    gs.push_back(build_random_regular_graph(
        num_vertices, d0, Rng::mix(seed ^ Rng::mix(0x4c41ull + l))));
  return union_layers(gs);
}

std::vector<MultilayerRow> multilayer_beta_experiment(int num_vertices, int d0,
                                                      const std::vector<int>& layer_list,
                                                      int trials, std::uint64_t seed) {
  std::vector<MultilayerRow> rows;
  double beta1 = 0.0;
  for (int L : layer_list) {
    MultilayerRow row;
    row.layers = L;
    row.all_ramanujan = true;
    double sum_beta = 0.0, sum_l2 = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t sub = Rng::mix(seed ^ Rng::mix((L << 16) + t));
      auto g = build_union_overlay(num_vertices, d0, L, sub);
      auto s = spectrum(g);
      sum_beta += s.beta;
      sum_l2 += s.lambda2;
      if (s.lambda2 > 2.0 * std::sqrt(static_cast<double>(L) * d0 - 1.0) + 1e-9)
        row.all_ramanujan = false;
    }
    row.mean_beta = sum_beta / trials;
    row.mean_lambda2 = sum_l2 / trials;
    if (L == 1) beta1 = row.mean_beta;
    row.sqrt_law_ratio = beta1 > 0 ? row.mean_beta * std::sqrt(static_cast<double>(L)) / beta1
                                   : 0.0;
    rows.push_back(row);
  }
  return rows;
}

EffectiveCapacity effective_capacity(int layers, int k0, double gamma) {
  OverlayConfig cfg;
  cfg.num_vertices = 1;
  cfg.k0 = k0;
  cfg.layers = layers;
  cfg.gamma = gamma;
  cfg.validate();
  EffectiveCapacity out;
  out.direct = layers * static_cast<double>(k0) /
               (1.0 + 2.0 * gamma * (1.0 - 1.0 / layers));
  out.checkerboard = std::ceil(layers / 2.0) * k0;
  out.best = (gamma > 0.5) ? std::max(out.direct, out.checkerboard) : out.direct;
  return out;
}

std::vector<SpeedupRow> end_to_end_overlay_speedup(int n, const std::vector<int>& layer_list,
                                                   int d0, int trials, std::uint64_t seed) {
  std::vector<SpeedupRow> rows;
  GridSpec gs{n, 3, GridModel::k2D};
  auto grid = clique_expansion(build_grid_hypergraph(gs));
  const double grid_depth = median_route_cd(grid, trials, seed);
  {
    SpeedupRow row;
    row.model = "2D grid";
    auto s = spectrum(grid);
    row.d_eff = s.degree;
    row.beta = s.beta;
    row.median_depth = grid_depth;
    row.speedup = 1.0;
    rows.push_back(row);
  }
  const int N = n * n;
  for (int L : layer_list) {
    auto g = build_union_overlay(N, d0, L, Rng::mix(seed ^ Rng::mix(0xfeedull + L)));
    SpeedupRow row;
    row.model = "L=" + std::to_string(L) + " overlay";
    auto s = spectrum(g);
    row.d_eff = s.degree;
    row.beta = s.beta;
    row.median_depth = median_route_cd(g, trials, seed);
    row.speedup = row.median_depth > 0 ? grid_depth / row.median_depth : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hyperroute
