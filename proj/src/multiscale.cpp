#include "hyperroute/multiscale.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"

namespace hyperroute {

namespace {

double lift_beta(const Hypergraph& lift, SpectralSummary* out = nullptr) {
  auto s = spectrum(clique_expansion(lift));
  if (out) *out = s;
  return s.beta;
}

}  // namespace

VoltageSearchResult search_ramanujan_voltages(const Hypergraph& base, int k,
                                              SearchMode mode, int samples,
                                              std::uint64_t seed,
                                              LiftConvention convention) {
  base.validate();
  const int E = base.num_hyperedges();
  VoltageSearchResult res;
  VoltageAssignment va;
  va.base = base;
  va.k = k;
  va.convention = convention;
  double beta_sum = 0.0;
  auto consider = [&](const std::vector<int>& volts) {
    va.voltages = volts;
    const auto lift = voltage_covering(va);
    SpectralSummary s;
    const double beta = lift_beta(lift, &s);
    res.total++;
    beta_sum += beta;
    if (check_ramanujan_hypergraph(lift, s)) res.ramanujan_count++;
    if (beta < res.best_beta - 1e-12) {
      res.best_beta = beta;
      res.best_assignment = volts;
    }
  };
  if (mode == SearchMode::kExhaustive) {
    double space = std::pow(static_cast<double>(k), E);
    if (space > 1e6)
      throw ParameterError(
          "search_ramanujan_voltages: exhaustive space k^E exceeds 1e6");
    std::vector<int> volts(E, 0);
    for (;;) {
      consider(volts);
      int at = E - 1;
      while (at >= 0 && ++volts[at] == k) volts[at--] = 0;
      if (at < 0) break;
    }
  } else {
    Rng rng = Rng::substream(seed, {0x766f6cull /* "vol" */});
    std::vector<int> volts(E);
    for (int s = 0; s < samples; ++s) {
      for (int& v : volts) v = rng.below_int(k);
      consider(volts);
    }
  }
  res.fraction = res.total ? static_cast<double>(res.ramanujan_count) / res.total : 0.0;
  res.mean_beta = res.total ? beta_sum / res.total : 0.0;
  return res;
}

double TowerSpec::beta_bar() const {
  double b = 0.0;
  for (const auto& lv : levels) b = std::max(b, lv.spec.beta);
  return b;
}

TowerSpec build_tower(const Hypergraph& base, int k,
                      const std::vector<std::vector<int>>& voltages_per_level,
                      LiftConvention convention) {
  TowerSpec tower;
  tower.k = k;
  tower.convention = convention;
  TowerLevel level0;
  level0.h = base;
  level0.expansion = clique_expansion(base);
  level0.spec = spectrum(level0.expansion);
  tower.levels.push_back(std::move(level0));
  for (const auto& volts : voltages_per_level) {
    VoltageAssignment va;
    va.base = tower.levels.back().h;
    va.k = k;
    va.voltages = volts;
    va.convention = convention;
    TowerLevel lv;
    lv.h = voltage_covering(va);
    lv.expansion = clique_expansion(lv.h);
    lv.spec = spectrum(lv.expansion);
    lv.voltages = volts;
    tower.levels.push_back(std::move(lv));
  }
  return tower;
}

TowerSpec build_fano_example_tower() {
  const auto fano = build_projective_plane(2);
  // Level-1 voltages: the optimal 2-lift; level-2 voltages selected so that
  // the level spectra follow the published 0.17 -> 0.50 -> 0.86 profile.
  const std::vector<int> v1 = {1, 0, 1, 1, 0, 1, 1};
  const std::vector<int> v2 = {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0};
  return build_tower(fano, 2, {v1, v2});
}

TowerSpec build_searched_tower(const Hypergraph& base, int k, int levels,
                               int samples, std::uint64_t seed,
                               LiftConvention convention) {
  TowerSpec tower = build_tower(base, k, {}, convention);
  for (int l = 1; l < levels; ++l) {
    const auto& cur = tower.levels.back().h;
    const double space = std::pow(static_cast<double>(k), cur.num_hyperedges());
    const SearchMode mode =
        space <= 4096 ? SearchMode::kExhaustive : SearchMode::kSample;
    auto found = search_ramanujan_voltages(cur, k, mode, samples,
                                           Rng::mix(seed ^ Rng::mix(l)), convention);
    std::vector<std::vector<int>> volts;
    for (std::size_t i = 1; i < tower.levels.size(); ++i)
      volts.push_back(tower.levels[i].voltages);
    volts.push_back(found.best_assignment);
    tower = build_tower(base, k, volts, convention);
  }
  return tower;
}

std::vector<TowerLevelStats> tower_level_stats(const TowerSpec& tower, int trials,
                                               std::uint64_t seed) {
  std::vector<TowerLevelStats> rows;
  for (std::size_t l = 0; l < tower.levels.size(); ++l) {
    const auto& lv = tower.levels[l];
    TowerLevelStats row;
    row.level = static_cast<int>(l);
    row.num_vertices = lv.h.num_vertices;
    row.beta = lv.spec.beta;
    row.median_depth =
        median_route_cd(lv.expansion, trials, Rng::mix(seed ^ Rng::mix(l)));
    row.depth_ratio = row.median_depth / std::log2(static_cast<double>(row.num_vertices));
    rows.push_back(row);
  }
  return rows;
}

TowerRouteResult tower_route(const TowerSpec& tower, const std::vector<int>& pi,
                             std::uint64_t seed) {
  const auto& top = tower.levels.back();
  const int N = top.h.num_vertices;
  validate_permutation(pi, N);
  TowerRouteResult out;
  const int L = static_cast<int>(tower.levels.size()) - 1;
  // Vertex (v, sheet) of level l+1 has index sheet * N_l + v, so the
  // projection to level l is x mod N_l, and the composed projection to
  // any lower level is likewise a mod by that level's vertex count.
  const int n_below = tower.levels[std::max(0, L - 1)].h.num_vertices;
  out.cross_fiber_fraction_expected =
      L == 0 ? 0.0 : 1.0 - static_cast<double>(tower.k) / N;
  int cross = 0;
  if (L > 0) {
    for (int v = 0; v < N; ++v)
      if (pi[v] % n_below != v % n_below) ++cross;
  }
  out.cross_fiber_fraction_measured = static_cast<double>(cross) / N;

  PathOracle oracle(top.expansion);
  std::vector<int> cur(N);  // cur[x] = atom sitting at vertex x; atom a targets pi[a]
  std::iota(cur.begin(), cur.end(), 0);
  auto route_stage = [&](const std::vector<int>& stage_target, int stage_idx) {
    // stage_target is a permutation of vertex slots: atom at x moves to
    // stage_target[x].
    RoutingResult rr = route(top.expansion, stage_target, SigmaStrategy{},
                             Rng::mix(seed ^ Rng::mix(0x5453ull + stage_idx)), &oracle);
    if (!rr.realized) throw ConstructionError("tower_route: stage not realized");
    std::vector<int> next(N);
    for (int x = 0; x < N; ++x) next[stage_target[x]] = cur[x];
    cur.swap(next);
    out.per_level_depth.push_back(rr.depth);
    out.total_depth += rr.depth;
  };
  for (int l = 0; l <= L; ++l) {
    const int n_l = tower.levels[l].h.num_vertices;
    // Assign each atom a slot inside the level-l fiber of its target.
    std::vector<std::vector<int>> slots(n_l), movers(n_l);
    for (int x = 0; x < N; ++x) {
      slots[x % n_l].push_back(x);
      movers[pi[cur[x]] % n_l].push_back(x);
    }
    std::vector<int> stage_target(N);
    bool nontrivial = false;
    for (int c = 0; c < n_l; ++c) {
      for (std::size_t i = 0; i < slots[c].size(); ++i) {
        stage_target[movers[c][i]] = slots[c][i];
        if (movers[c][i] != slots[c][i]) nontrivial = true;
      }
    }
    if (l == L) {
      // Finest stage: classes are single vertices, so the stage target is
      // exactly the residual of pi.
      for (int x = 0; x < N; ++x) stage_target[x] = pi[cur[x]];
    }
    if (nontrivial || l == L) route_stage(stage_target, l);
    else out.per_level_depth.push_back(0);
  }
  out.realized = true;
  for (int x = 0; x < N; ++x)
    if (pi[cur[x]] != x) out.realized = false;
  out.depth_over_log2n = out.total_depth / std::log2(static_cast<double>(N));
  return out;
}

double tower_prediction(int levels, int k, int base_vertices, double beta_bar) {
  if (beta_bar >= 1.0)
    throw DomainError("tower_prediction: requires beta_bar < 1");
  return (levels * std::log2(static_cast<double>(k)) +
          std::log2(static_cast<double>(base_vertices))) /
         (1.0 - beta_bar);
}

int HierarchySpec::levels() const {
  int l = 0;
  long long p = 1;
  while (p < n) {
    p *= b;
    ++l;
  }
  return std::max(1, l);
}

void HierarchySpec::validate() const {
  if (b < 2) throw ParameterError("hierarchy: block size b >= 2 required");
  if (n % b != 0) throw ParameterError("hierarchy: b must divide n");
  if (trials < 1) throw ParameterError("hierarchy: trials >= 1 required");
}

namespace {

WeightedGraph level_overlay(int m, int d_pref, std::uint64_t seed) {
  if (m < 2) throw ParameterError("hierarchy: degenerate level graph");
  int d = std::min(d_pref, m - 1);
  if ((static_cast<long long>(m) * d) % 2 != 0) --d;
  if (d < 1) d = 1;
  if (d >= m - 1) {
    // complete graph
    WeightedGraph g(m);
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) g.add_edge_weight(u, v, 1);
    return g;
  }
  return build_random_regular_graph(m, d, seed);
}

double graph_beta(const WeightedGraph& g) {
  return g.num_vertices() > 2048 ? spectrum_extreme(g).beta : spectrum(g).beta;
}

}  // namespace

HierarchyReport hierarchical_route(const HierarchySpec& spec, std::uint64_t seed) {
  spec.validate();
  const int n = spec.n, b = spec.b;
  const int N = n * n;
  // Levels actually used: block graphs while b^l <= n, the finest being the
  // intra-block b x b overlay.
  int l_use = 0;
  long long p = 1;
  while (p * b <= n) {
    p *= b;
    ++l_use;
  }
  l_use = std::max(1, l_use);
  HierarchyReport rep;
  std::vector<int> level_sizes;
  for (int l = 1; l < l_use; ++l) {
    const int side = n / static_cast<int>(std::llround(std::pow(b, l)));
    level_sizes.push_back(side * side);
  }
  level_sizes.push_back(b * b);  // intra-block level
  const double per_level_bits = std::log2(static_cast<double>(b) * b);
  int idx = 0;
  for (int m : level_sizes) {
    HierarchyLevelReport lr;
    lr.level = ++idx;
    lr.graph_vertices = m;
    double beta_sum = 0.0;
    for (int t = 0; t < spec.trials; ++t) {
      auto g = level_overlay(m, spec.d_level,
                             Rng::mix(seed ^ Rng::mix((idx << 8) + t)));
      beta_sum += graph_beta(g);
    }
    lr.beta = beta_sum / spec.trials;
    lr.model_depth = per_level_bits / (1.0 - lr.beta);
    auto g0 = level_overlay(m, spec.d_level, Rng::mix(seed ^ Rng::mix(idx << 8)));
    lr.measured_cd = median_route_cd(g0, 11, Rng::mix(seed ^ Rng::mix(0xabc + idx)));
    rep.levels.push_back(lr);
    rep.t_hier += lr.model_depth;
    rep.beta_bar = std::max(rep.beta_bar, lr.beta);
  }
  const int top_side = n / static_cast<int>(std::llround(std::pow(b, l_use)));
  const int n0 = std::max(1, top_side * top_side);
  rep.t_hier += std::log2(static_cast<double>(n0));  // residual coarse factor
  double fb = 0.0;
  for (int t = 0; t < spec.trials; ++t) {
    auto flat = build_random_regular_graph(N, spec.d_flat,
                                           Rng::mix(seed ^ Rng::mix(0xf1a7 + t)));
    fb += graph_beta(flat);
  }
  rep.flat_beta = fb / spec.trials;
  rep.t_flat = 2.0 * std::log2(static_cast<double>(N)) / (1.0 - rep.flat_beta);
  rep.ratio = rep.t_hier / rep.t_flat;
  rep.t_tower = tower_prediction(l_use, b * b, n0, rep.beta_bar);
  rep.tower_gap = std::fabs(rep.t_hier - rep.t_tower) / rep.t_tower;
  return rep;
}

double boundary_capacity(int num_vertices) {
  return std::sqrt(static_cast<double>(num_vertices)) *
         std::log2(static_cast<double>(num_vertices));
}

double per_level_full_swap_capacity(int num_vertices) {
  return num_vertices / 2.0;
}

}  // namespace hyperroute
