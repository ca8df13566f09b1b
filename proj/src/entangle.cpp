#include "hyperroute/entangle.hpp"

#include <algorithm>
#include <cmath>

#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"
#include "hyperroute/routing.hpp"

namespace hyperroute {

void EntanglementConfig::validate() const {
  if (n < 2) throw ParameterError("entanglement config: n >= 2 required");
  if (d_ent < 0) throw ParameterError("entanglement config: d_ent >= 0 required");
  if (k < 0) throw ParameterError("entanglement config: k >= 1 required");
}

double exact_mean_manhattan(int n) {
  return 2.0 * (static_cast<double>(n) * n - 1.0) / (3.0 * n);
}

double teleport_route_depth(int num_vertices, int d_ent, std::uint64_t seed) {
  if (num_vertices == 2) return 1.0;  // single swap
  auto overlay = build_random_regular_graph(num_vertices, d_ent,
                                            Rng::mix(seed ^ Rng::mix(0x74656cull)));
  return median_route_cd(overlay, 20, seed);
}

long long distribution_cost(const EntanglementConfig& config) {
  config.validate();
  if (config.d_ent == 0) return 0;
  const long long N = config.num_vertices();
  const double k = config.k > 0 ? static_cast<double>(config.k) : static_cast<double>(N);
  const double dbar = config.mean_pair_distance > 0 ? config.mean_pair_distance
                                                    : 2.0 * config.n / 3.0;
  const double pairs = 0.5 * config.d_ent * static_cast<double>(N);
  return static_cast<long long>(std::ceil(pairs * dbar / k - 1e-9));
}

long long physical_depth_baseline(int n) {
  return (3LL * n + 1) / 2;  // ceil(3n/2)
}

int predicted_route_depth(int num_vertices) {
  return static_cast<int>(
      std::llround(2.0 * std::log2(static_cast<double>(num_vertices)) / 3.0));
}

CrossoverReport crossover_rounds(int num_vertices, int d_ent, double t_route,
                                 long long t_phys) {
  EntanglementConfig cfg;
  cfg.n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(num_vertices))));
  if (cfg.n * cfg.n != num_vertices)
    throw ParameterError("crossover_rounds: N must be a perfect square");
  cfg.d_ent = d_ent;
  CrossoverReport rep;
  rep.t_dist = distribution_cost(cfg);
  rep.t_phys = t_phys;
  rep.t_route = t_route;
  if (t_phys <= t_route) {
    rep.never_pays = true;  // entanglement never pays
    return rep;
  }
  rep.r_break = static_cast<double>(rep.t_dist) / (t_phys - t_route);
  return rep;
}

HybridTeleportReport hybrid_teleport(int n, int threshold, std::uint64_t seed,
                                     int d_ent, int trials) {
  if (threshold < 1 || threshold > 2 * n)
    throw ParameterError("hybrid_teleport: threshold in [1, 2n] required");
  const int N = n * n;
  auto manh = [n](int u, int v) {
    return std::abs(u / n - v / n) + std::abs(u % n - v % n);
  };
  GridSpec gs{n, 3, GridModel::k2D};
  auto grid = clique_expansion(build_grid_hypergraph(gs)).simple_support();
  const auto grid_edges = grid.edges();
  HybridTeleportReport rep;
  double frac = 0.0, t_tel = 0.0, t_clean = 0.0;
  auto overlay = build_random_regular_graph(N, d_ent, Rng::mix(seed ^ Rng::mix(0x6862)));
  PathOracle oracle(overlay);
  EdgeIndex eidx(overlay);
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, {0x686274ull, static_cast<std::uint64_t>(t)});
    auto pi = rng.permutation(N);
    std::vector<char> teleported(N, 0);
    int count = 0;
    for (int v = 0; v < N; ++v)
      if (manh(v, pi[v]) > threshold) {
        teleported[v] = 1;
        ++count;
      }
    frac += static_cast<double>(count) / N;
    if (count > 0) {
      // Teleportation moves states over the overlay; its depth is the
      // matching depth of the permutation there.
      Rng rng2 = Rng::substream(seed, {0x746272ull, static_cast<std::uint64_t>(t)});
      PathSet ps = two_phase_paths(oracle, eidx, rng2.permutation(N), pi);
      t_tel += ps.lmr_depth();
    }
    // Cleanup: atoms below the threshold route physically on the grid.
    // Teleported sites are free movers (their state already arrived), so
    // only the short-haul atoms carry displacement.
    {
      std::vector<int> pos(N), occ(N), target(N, -1);
      for (int v = 0; v < N; ++v) {
        pos[v] = v;
        occ[v] = v;
        if (!teleported[v]) target[v] = pi[v];
      }
      auto rho2 = [&](int atom, int at) -> long long {
        if (target[atom] < 0) return 0;
        const long long d = manh(at, target[atom]);
        return d * d;
      };
      long long phi = 0;
      for (int v = 0; v < N; ++v) phi += rho2(v, v);
      int steps = 0;
      while (phi > 0) {
        struct Cand {
          long long gain;
          int idx, u, v;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < static_cast<int>(grid_edges.size()); ++i) {
          const int u = grid_edges[i][0], v = grid_edges[i][1];
          const int a = occ[u], b = occ[v];
          const long long gain =
              rho2(a, u) + rho2(b, v) - rho2(a, v) - rho2(b, u);
          if (gain > 0) cands.push_back({gain, i, u, v});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
          return a.gain != b.gain ? a.gain > b.gain : a.idx < b.idx;
        });
        std::vector<char> used(N, 0);
        long long total = 0;
        for (const Cand& c : cands) {
          if (used[c.u] || used[c.v]) continue;
          used[c.u] = used[c.v] = 1;
          const int a = occ[c.u], b = occ[c.v];
          std::swap(occ[c.u], occ[c.v]);
          pos[a] = c.v;
          pos[b] = c.u;
          total += c.gain;
        }
        if (total == 0) break;
        phi -= total;
        ++steps;
      }
      if (phi > 0) {
        // Rare stall with free movers; walk the stragglers home serially.
        long long max_rho = 0;
        for (int a = 0; a < N; ++a)
          if (target[a] >= 0)
            max_rho = std::max<long long>(max_rho, manh(pos[a], target[a]));
        steps += static_cast<int>(2 * max_rho);
      }
      t_clean += steps;
    }
  }
  rep.fraction_teleported = frac / trials;
  rep.t_teleport = t_tel / trials;
  rep.t_cleanup = t_clean / trials;
  rep.t_total = std::max(rep.t_teleport, rep.t_cleanup);
  rep.t_sequential = rep.t_teleport + rep.t_cleanup;
  const double t_phys = static_cast<double>(physical_depth_baseline(n));
  rep.speedup_vs_physical = rep.t_total > 0 ? t_phys / rep.t_total : 0.0;
  return rep;
}

}  // namespace hyperroute
