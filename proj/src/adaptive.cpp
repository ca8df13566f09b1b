#include "hyperroute/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"
#include "hyperroute/spectral.hpp"

namespace hyperroute {

DisplacementState::DisplacementState(const WeightedGraph& overlay,
                                     const std::vector<int>& targets,
                                     DisplacementMetric metric, int grid_side)
    : n_(overlay.num_vertices()), grid_side_(grid_side), targets_(targets) {
  validate_permutation(targets, n_);
  if (metric == DisplacementMetric::kGridManhattan) {
    if (grid_side_ * grid_side_ != n_)
      throw ParameterError("displacement state: grid metric needs N = n^2");
  } else {
    grid_side_ = 0;
    const auto adj = overlay.support_adjacency();
    bfs_dist_.assign(static_cast<std::size_t>(n_) * n_, 0xffff);
    for (int s = 0; s < n_; ++s) {
      auto* d = &bfs_dist_[static_cast<std::size_t>(s) * n_];
      d[s] = 0;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u])
          if (d[v] == 0xffff) {
            d[v] = d[u] + 1;
            q.push(v);
          }
      }
    }
  }
  pos_.resize(n_);
  occ_.resize(n_);
  std::iota(pos_.begin(), pos_.end(), 0);
  std::iota(occ_.begin(), occ_.end(), 0);
  phi_ = phi_recomputed();
}

int DisplacementState::distance(int u, int v) const {
  if (grid_side_ > 0) {
    const int n = grid_side_;
    return std::abs(u / n - v / n) + std::abs(u % n - v % n);
  }
  return bfs_dist_[static_cast<std::size_t>(u) * n_ + v];
}

double DisplacementState::phi_recomputed() const {
  double s = 0.0;
  for (int a = 0; a < n_; ++a) {
    const double r = distance(pos_[a], targets_[a]);
    s += r * r;
  }
  return s;
}

void DisplacementState::swap_vertices(int u, int v) {
  const int a = occ_[u], b = occ_[v];
  const double before = static_cast<double>(rho(a)) * rho(a) +
                        static_cast<double>(rho(b)) * rho(b);
  std::swap(occ_[u], occ_[v]);
  pos_[a] = v;
  pos_[b] = u;
  const double after = static_cast<double>(rho(a)) * rho(a) +
                       static_cast<double>(rho(b)) * rho(b);
  phi_ += after - before;
}

GreedyStepResult greedy_matching_step(DisplacementState& state,
                                      const std::vector<std::array<int, 3>>& edges) {
  struct Cand {
    long long gain;
    int idx;
    int u, v;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const int u = edges[i][0], v = edges[i][1];
    const int a = state.atom_at(u), b = state.atom_at(v);
    const long long ru = state.distance(u, state.target_of(a));
    const long long rv = state.distance(v, state.target_of(b));
    const long long su = state.distance(v, state.target_of(a));
    const long long sv = state.distance(u, state.target_of(b));
    const long long gain = ru * ru + rv * rv - su * su - sv * sv;
    if (gain > 0) cands.push_back({gain, i, u, v});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    return a.idx < b.idx;
  });
  GreedyStepResult res;
  std::vector<char> used(state.num_vertices(), 0);
  for (const Cand& c : cands) {
    if (used[c.u] || used[c.v]) continue;
    used[c.u] = used[c.v] = 1;
    state.swap_vertices(c.u, c.v);
    res.matching.push_back({c.u, c.v});
    res.delta_phi += static_cast<double>(c.gain);
  }
  return res;
}

StallReport run_greedy_until_stall(int n, int d, std::uint64_t seed,
                                   DisplacementMetric metric) {
  const int N = n * n;
  auto overlay = build_random_regular_graph(N, d, Rng::mix(seed ^ Rng::mix(0x6f76ull)));
  const auto edges = overlay.edges();
  Rng rng = Rng::substream(seed, {0x7069ull});
  auto pi = rng.permutation(N);
  DisplacementState st(overlay, pi, metric, metric == DisplacementMetric::kGridManhattan ? n : 0);
  StallReport rep;
  rep.phi0 = st.phi();
  rep.phi_history.push_back(st.phi());
  if (rep.phi0 == 0) {
    rep.placed = true;
    return rep;
  }
  for (;;) {
    const double before = st.phi();
    auto step = greedy_matching_step(st, edges);
    if (step.delta_phi <= 0) break;
    if (st.phi() > before + 1e-9) rep.monotonicity_violations++;
    if (rep.steps_to_stall == 0) rep.step0_delta = step.delta_phi / rep.phi0;
    rep.steps_to_stall++;
    rep.phi_history.push_back(st.phi());
  }
  rep.phi_stall = st.phi();
  rep.stall_fraction = rep.phi_stall / rep.phi0;
  rep.placed = st.placed();
  return rep;
}

ConcentrationReport concentration_check(int n, int d, int trials, std::uint64_t seed) {
  if (trials < 20)
    throw ParameterError("concentration_check: trials >= 20 required");
  const int N = n * n;
  struct Sample {
    double level;  // Phi_t / Phi_0
    double dphi;
  };
  std::vector<Sample> samples;
  long long violations = 0;
  for (int t = 0; t < trials; ++t) {
    auto overlay = build_random_regular_graph(
        N, d, Rng::mix(seed ^ Rng::mix(0x636f6e ^ (t * 2654435761ull))));
    const auto edges = overlay.edges();
    Rng rng = Rng::substream(seed, {0x636f6e, static_cast<std::uint64_t>(t)});
    auto pi = rng.permutation(N);
    DisplacementState st(overlay, pi, DisplacementMetric::kGridManhattan, n);
    const double phi0 = st.phi();
    if (phi0 == 0) continue;
    for (;;) {
      const double level = st.phi() / phi0;
      const double before = st.phi();
      auto step = greedy_matching_step(st, edges);
      if (step.delta_phi <= 0) break;
      if (st.phi() > before + 1e-9) ++violations;
      samples.push_back({level, step.delta_phi});
    }
  }
  ConcentrationReport rep;
  rep.monotonicity_violations = violations;
  rep.samples = static_cast<long long>(samples.size());
  int bins = 10;
  const long long min_per_bin = 5;
  for (;;) {
    std::vector<double> sum(bins, 0.0);
    std::vector<long long> cnt(bins, 0);
    auto bin_of = [&](double level) {
      int b = static_cast<int>(level * bins);
      return std::clamp(b, 0, bins - 1);
    };
    for (const auto& s : samples) {
      const int b = bin_of(s.level);
      sum[b] += s.dphi;
      cnt[b]++;
    }
    bool sparse = false;
    for (int b = 0; b < bins; ++b)
      if (cnt[b] > 0 && cnt[b] < min_per_bin) sparse = true;
    if (sparse && bins > 2) {
      bins /= 2;
      rep.widened = true;
      continue;
    }
    long long tail = 0, tot = 0;
    for (const auto& s : samples) {
      const int b = bin_of(s.level);
      if (cnt[b] == 0) continue;
      const double mean = sum[b] / cnt[b];
      ++tot;
      if (s.dphi < 0.5 * mean) ++tail;
    }
    rep.alpha_hat = tot ? static_cast<double>(tail) / tot : 0.0;
    rep.bins_used = bins;
    break;
  }
  return rep;
}

HybridReport hybrid_greedy_valiant(int n, int d, std::uint64_t seed, int trials) {
  const int N = n * n;
  HybridReport rep;
  double t_stall = 0.0, frac = 0.0, beta = 0.0, resid_cd = 0.0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t sub = Rng::mix(seed ^ Rng::mix(0x6879ull + t));
    auto overlay = build_random_regular_graph(N, d, Rng::mix(sub ^ 1));
    const auto edges = overlay.edges();
    Rng rng = Rng::substream(sub, {0x7069ull});
    auto pi = rng.permutation(N);
    DisplacementState st(overlay, pi, DisplacementMetric::kGridManhattan, n);
    const double phi0 = st.phi();
    int steps = 0;
    for (;;) {
      auto step = greedy_matching_step(st, edges);
      if (step.delta_phi <= 0) break;
      ++steps;
    }
    t_stall += steps;
    frac += phi0 > 0 ? st.phi() / phi0 : 0.0;
    beta += spectrum(overlay).beta;
    // Residual permutation: the atom at vertex x still has to reach its
    // target, so route tau(x) = target(atom_at(x)).
    std::vector<int> tau(N);
    for (int x = 0; x < N; ++x) tau[x] = st.target_of(st.atom_at(x));
    PathOracle oracle(overlay);
    EdgeIndex eidx(overlay);
    Rng rng2 = Rng::substream(sub, {0x726573ull});
    PathSet ps = two_phase_paths(oracle, eidx, rng2.permutation(N), tau);
    resid_cd += ps.lmr_depth();
  }
  rep.t_stall = t_stall / trials;
  rep.stall_fraction = frac / trials;
  rep.beta = beta / trials;
  rep.t_residual_measured = resid_cd / trials;
  const double log2n = std::log2(static_cast<double>(N));
  rep.t_pure = 2.0 * log2n / (1.0 - rep.beta);
  rep.t_residual_model = rep.stall_fraction * rep.t_pure;
  rep.t_hybrid = rep.t_stall + rep.t_residual_model;
  rep.speedup = rep.t_hybrid > 0 ? rep.t_pure / rep.t_hybrid : 0.0;
  return rep;
}

OverlayFamily default_overlay_family(int num_vertices, std::uint64_t seed) {
  OverlayFamily fam;
  fam.names = {"d=4", "d=8", "complete"};
  fam.graphs.push_back(build_random_regular_graph(num_vertices, 4, Rng::mix(seed ^ 0xa4)));
  fam.graphs.push_back(build_random_regular_graph(num_vertices, 8, Rng::mix(seed ^ 0xa8)));
  WeightedGraph k(num_vertices);
  for (int u = 0; u < num_vertices; ++u)
    for (int v = u + 1; v < num_vertices; ++v) k.add_edge_weight(u, v, 1);
  fam.graphs.push_back(std::move(k));
  return fam;
}

namespace {

// Shared state for overlay selection. Gains are scored in the misplacement
// metric (rho = 1 until an atom sits on its target), which every member of
// the family can make progress in and under which the complete member is
// guaranteed to finish the placement.
struct MwState {
  int n;
  std::vector<int> pos, occ, targets;

  MwState(int n_, const std::vector<int>& pi) : n(n_), targets(pi) {
    pos.resize(n);
    occ.resize(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::iota(occ.begin(), occ.end(), 0);
  }
  int rho(int atom, int at) const { return at == targets[atom] ? 0 : 1; }
  double phi() const {
    double s = 0;
    for (int a = 0; a < n; ++a) s += rho(a, pos[a]);
    return s;
  }
  bool placed() const {
    for (int a = 0; a < n; ++a)
      if (pos[a] != targets[a]) return false;
    return true;
  }
  long long greedy_step(const std::vector<std::array<int, 3>>& edges) {
    struct Cand {
      int gain, idx, u, v;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const int u = edges[i][0], v = edges[i][1];
      const int a = occ[u], b = occ[v];
      const int gain = rho(a, u) + rho(b, v) - rho(a, v) - rho(b, u);
      if (gain > 0) cands.push_back({gain, i, u, v});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.gain != b.gain ? a.gain > b.gain : a.idx < b.idx;
    });
    std::vector<char> used(n, 0);
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
    return total;
  }
};

}  // namespace

MwReport mw_overlay_selection(const OverlayFamily& family, const std::vector<int>& pi,
                              double eta, std::uint64_t seed, int grid_side) {
  (void)grid_side;
  const int m = static_cast<int>(family.graphs.size());
  if (m == 0) throw ParameterError("mw_overlay_selection: empty family");
  const int N = family.graphs.front().num_vertices();
  for (const auto& g : family.graphs)
    if (g.num_vertices() != N)
      throw ParameterError("mw_overlay_selection: family must share the vertex set");
  validate_permutation(pi, N);
  const int cap = static_cast<int>(50.0 * std::log2(static_cast<double>(N))) + 1;

  std::vector<std::vector<std::array<int, 3>>> edge_lists;
  for (const auto& g : family.graphs) edge_lists.push_back(g.edges());

  MwState st(N, pi);
  std::vector<double> w(m, 1.0);
  Rng rng = Rng::substream(seed, {0x6d77ull});
  MwReport rep;
  int steps = 0;
  while (!st.placed() && steps < cap) {
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    double pick = rng.uniform() * total;
    int i = 0;
    while (i + 1 < m && pick > w[i]) pick -= w[i], ++i;
    const double phi_before = st.phi();
    const double delta = static_cast<double>(st.greedy_step(edge_lists[i]));
    const double reduction =
        phi_before > 0 ? std::clamp(delta / phi_before, 0.0, 1.0) : 0.0;
    w[i] *= std::exp(eta * reduction);
    ++steps;
  }
  rep.t_mw = steps;
  rep.completed = st.placed();
  rep.final_weights = w;
  int best = -1;
  for (int i = 0; i < m; ++i) {
    MwState single(N, pi);
    int s = 0;
    bool ok = true;
    while (!single.placed()) {
      if (single.greedy_step(edge_lists[i]) <= 0 || ++s > cap) {
        ok = false;  // stalled short of placement
        break;
      }
    }
    if (ok && (best < 0 || s < best)) best = s;
  }
  rep.t_best = best;
  rep.competitive_ratio = best > 0 ? rep.t_mw / best : 0.0;
  return rep;
}

}  // namespace hyperroute
