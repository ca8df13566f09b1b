#include "hyperroute/routing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <optional>

#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"

namespace hyperroute {

PathOracle::PathOracle(const WeightedGraph& g) : n_(g.num_vertices()) {
  const auto adj = g.support_adjacency();
  parent_.assign(static_cast<std::size_t>(n_) * n_, -1);
  dist_.assign(static_cast<std::size_t>(n_) * n_, 0xffff);
  std::vector<int> frontier, next;
  for (int s = 0; s < n_; ++s) {
    auto* par = &parent_[static_cast<std::size_t>(s) * n_];
    auto* dst = &dist_[static_cast<std::size_t>(s) * n_];
    dst[s] = 0;
    frontier.assign(1, s);
    int level = 0;
    int seen = 1;
    while (!frontier.empty()) {
      ++level;
      next.clear();
      // Frontier is sorted, so the first discoverer of w is the
      // lowest-index vertex of the previous level adjacent to w.
      for (int u : frontier) {
        for (int w : adj[u]) {
          if (dst[w] == 0xffff) {
            dst[w] = static_cast<std::uint16_t>(level);
            par[w] = u;
            next.push_back(w);
            ++seen;
          }
        }
      }
      std::sort(next.begin(), next.end());
      frontier.swap(next);
      if (!frontier.empty()) diameter_ = std::max(diameter_, level);
    }
    if (seen != n_) throw ParameterError("path oracle: graph is disconnected");
  }
}

std::vector<int> PathOracle::path(int u, int v) const {
  std::vector<int> out;
  out.push_back(v);
  const auto* par = &parent_[static_cast<std::size_t>(u) * n_];
  while (out.back() != u) out.push_back(par[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

EdgeIndex::EdgeIndex(const WeightedGraph& g) {
  const int n = g.num_vertices();
  offset_.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) {
    offset_[u] = count_;
    for (const auto& [v, w] : g.neighbors(u))
      if (v > u) {
        upper_.push_back(v);
        ++count_;
      }
  }
  offset_[n] = count_;
}

int EdgeIndex::index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto first = upper_.begin() + offset_[u];
  const auto last = upper_.begin() + offset_[u + 1];
  const auto it = std::lower_bound(first, last, v);
  return offset_[u] + static_cast<int>(it - first);
}

void validate_permutation(const std::vector<int>& pi, int n) {
  if (static_cast<int>(pi.size()) != n)
    throw ParameterError("permutation: wrong length");
  std::vector<char> seen(n, 0);
  for (int v : pi) {
    if (v < 0 || v >= n || seen[v])
      throw ParameterError("permutation: not a bijection on [0, N)");
    seen[v] = 1;
  }
}

namespace {

void measure_phase(const EdgeIndex& edges, const std::vector<std::vector<int>>& walks,
                   int* c_out, int* d_out) {
  std::vector<int> load(edges.count(), 0);
  int dil = 0;
  for (const auto& w : walks) {
    dil = std::max(dil, static_cast<int>(w.size()) - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      load[edges.index(w[i], w[i + 1])]++;
  }
  *c_out = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
  *d_out = dil;
}

}  // namespace

PathSet two_phase_paths(const PathOracle& oracle, const EdgeIndex& edges,
                        std::vector<int> sigma, std::vector<int> pi) {
  const int n = oracle.num_vertices();
  PathSet ps;
  ps.sigma = std::move(sigma);
  ps.pi = std::move(pi);
  ps.scatter.reserve(n);
  ps.gather.reserve(n);
  for (int v = 0; v < n; ++v) {
    ps.scatter.push_back(oracle.path(v, ps.sigma[v]));
    ps.gather.push_back(oracle.path(ps.sigma[v], ps.pi[v]));
  }
  measure_phase(edges, ps.scatter, &ps.c1, &ps.d1);
  measure_phase(edges, ps.gather, &ps.c2, &ps.d2);
  ps.congestion = std::max(ps.c1, ps.c2);
  ps.dilation = std::max(ps.d1, ps.d2);
  return ps;
}

PathSet valiant_paths(const WeightedGraph& g, const PathOracle& oracle,
                      const std::vector<int>& pi, SigmaStrategy strategy,
                      std::uint64_t seed) {
  const int n = g.num_vertices();
  validate_permutation(pi, n);
  EdgeIndex edges(g);
  std::vector<int> sigma;
  switch (strategy.kind) {
    case SigmaKind::kUniformRandom: {
      Rng rng = Rng::substream(seed, {0x7369676dull /* "sigm" */});
      sigma = rng.permutation(n);
      break;
    }
    case SigmaKind::kDerandomized:
      sigma = derandomized_sigma(g, oracle, pi);
      break;
    case SigmaKind::kIdentity:
      sigma.resize(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      break;
  }
  return two_phase_paths(oracle, edges, std::move(sigma), pi);
}

std::vector<int> derandomized_sigma(const WeightedGraph& g, const PathOracle& oracle,
                                    const std::vector<int>& pi) {
  const int n = g.num_vertices();
  validate_permutation(pi, n);
  EdgeIndex edges(g);
  const double lambda =
      std::log(static_cast<double>(n)) / std::max(oracle.diameter(), 1);
  std::vector<int> load_s(edges.count(), 0), load_g(edges.count(), 0);
  std::vector<char> used(n, 0);
  std::vector<int> sigma(n, -1);
  auto bump_cost = [&](const std::vector<int>& load, int e) {
    // increment cost exp(l(x+1)) - exp(l x)
    const double x = load[e];
    return std::exp(lambda * (x + 1.0)) - std::exp(lambda * x);
  };
  for (int v = 0; v < n; ++v) {
    double best = 0.0;
    int best_c = -1;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      double delta = 0.0;
      auto walk_s = oracle.path(v, c);
      for (std::size_t i = 0; i + 1 < walk_s.size(); ++i)
        delta += bump_cost(load_s, edges.index(walk_s[i], walk_s[i + 1]));
      auto walk_g = oracle.path(c, pi[v]);
      for (std::size_t i = 0; i + 1 < walk_g.size(); ++i)
        delta += bump_cost(load_g, edges.index(walk_g[i], walk_g[i + 1]));
      if (best_c < 0 || delta < best - 1e-12) {
        best = delta;
        best_c = c;
      }
    }
    sigma[v] = best_c;
    used[best_c] = 1;
    auto walk_s = oracle.path(v, best_c);
    for (std::size_t i = 0; i + 1 < walk_s.size(); ++i)
      load_s[edges.index(walk_s[i], walk_s[i + 1])]++;
    auto walk_g = oracle.path(best_c, pi[v]);
    for (std::size_t i = 0; i + 1 < walk_g.size(); ++i)
      load_g[edges.index(walk_g[i], walk_g[i + 1])]++;
  }
  return sigma;
}

namespace {

bool is_complete_support(const WeightedGraph& g) {
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u)
    if (static_cast<int>(g.neighbors(u).size()) != n - 1) return false;
  return n >= 2;
}

// Any permutation is a product of two involutions; on a complete support
// each involution is one matching step (cycle-reversal construction:
// rev1(i) = -i mod m, rev2(i) = 1-i mod m, rev2 o rev1 = +1).
void schedule_complete(const std::vector<int>& tau, int truncate_k, Schedule* out) {
  const int n = static_cast<int>(tau.size());
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, int>> m1, m2;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || tau[s] == s) continue;
    std::vector<int> cyc;
    for (int x = s; !seen[x]; x = tau[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    const int m = static_cast<int>(cyc.size());
    for (int i = 1; 2 * i < m; ++i) m1.push_back({cyc[i], cyc[m - i]});
    std::vector<char> done(m, 0);
    for (int i = 0; i < m; ++i) {
      const int j = ((1 - i) % m + m) % m;
      if (i != j && !done[i] && !done[j]) {
        m2.push_back({cyc[i], cyc[j]});
        done[i] = done[j] = 1;
      }
    }
  }
  auto emit = [&](std::vector<std::pair<int, int>>& m) {
    if (m.empty()) return;
    std::sort(m.begin(), m.end());
    if (truncate_k <= 0) {
      out->push_back(m);
      return;
    }
    for (std::size_t at = 0; at < m.size(); at += truncate_k)
      out->push_back({m.begin() + at,
                      m.begin() + std::min(m.size(), at + truncate_k)});
  };
  emit(m1);
  emit(m2);
}

// Pebbles closest to their goals are scheduled first (arrivals unclog the
// endgame); ties are broken by a per-step deterministic jitter.
struct PhaseState {
  int n;
  const PathOracle* oracle;
  std::vector<int> pos;     // pebble -> vertex
  std::vector<int> occ;     // vertex -> pebble
  std::vector<int> target;  // pebble -> goal vertex
  std::vector<std::deque<int>> plan;  // next vertices for each pebble

  void replan(int p) {
    plan[p].clear();
    if (pos[p] == target[p]) return;
    auto walk = oracle->path(pos[p], target[p]);
    plan[p].assign(walk.begin() + 1, walk.end());
  }
  bool done() const {
    for (int p = 0; p < n; ++p)
      if (!plan[p].empty()) return false;
    return true;
  }
  void apply_swap(int u, int v) {
    const int a = occ[u], b = occ[v];
    std::swap(occ[u], occ[v]);
    pos[a] = v;
    pos[b] = u;
    for (int q : {a, b}) {
      if (!plan[q].empty() && plan[q].front() == pos[q]) {
        plan[q].pop_front();
        if (!plan[q].empty() && pos[q] == target[q]) plan[q].clear();
      } else {
        replan(q);
      }
    }
  }
};

// Deterministic finisher: lock target vertices in spanning-tree post-order
// (so the unlocked region always contains a connected subtree) and walk
// pebbles home through the unlocked induced subgraph. Walks with pairwise
// disjoint vertex sets are packed into one wave and executed in lockstep.
// Guaranteed to terminate; only used when the greedy loop stalls.
void finish_by_waves(const WeightedGraph& g, PhaseState& st, int truncate_k,
                     Schedule* out) {
  const int n = st.n;
  const auto adj = g.support_adjacency();
  std::vector<int> parent(n, -2), order;
  order.reserve(n);
  {
    std::vector<int> stack{0};
    parent[0] = -1;
    std::vector<std::size_t> next(n, 0);
    while (!stack.empty()) {
      const int u = stack.back();
      if (next[u] == adj[u].size()) {
        order.push_back(u);  // post-order
        stack.pop_back();
        continue;
      }
      const int w = adj[u][next[u]++];
      if (parent[w] == -2) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> pebble_for(n, -1);  // goal vertex -> pebble
  for (int p = 0; p < n; ++p) pebble_for[st.target[p]] = p;
  // Only a contiguous post-order prefix is ever locked, so the unlocked
  // region always contains a connected subtree and every pending walk
  // exists. Goals satisfied out of order stay unlocked (and may be
  // displaced again) until the prefix reaches them.
  std::vector<char> locked(n, 0);
  std::size_t at = 0;
  std::vector<char> vis(n, 0), wave_used(n, 0);
  std::vector<int> par(n, -1);
  for (;;) {
    while (at < order.size() && st.pos[pebble_for[order[at]]] == order[at]) {
      locked[order[at]] = 1;
      ++at;
    }
    if (at >= order.size()) break;
    // Pack a wave of vertex-disjoint walks, scanning goals in lock order.
    std::fill(wave_used.begin(), wave_used.end(), 0);
    std::vector<std::vector<int>> walks;
    for (std::size_t i = at; i < order.size(); ++i) {
      const int goal = order[i];
      const int p = pebble_for[goal];
      const int cur = st.pos[p];
      if (cur == goal) continue;  // already home; rehomed later if displaced
      if (wave_used[cur]) continue;  // start vertex claimed by an earlier walk
      // BFS through unlocked vertices not already claimed by this wave.
      std::fill(vis.begin(), vis.end(), 0);
      std::deque<int> q;
      q.push_back(cur);
      vis[cur] = 1;
      par[cur] = -1;
      bool found = false;
      while (!q.empty() && !found) {
        const int u = q.front();
        q.pop_front();
        for (int w : adj[u]) {
          if (vis[w] || locked[w] || wave_used[w]) continue;
          vis[w] = 1;
          par[w] = u;
          if (w == goal) {
            found = true;
            break;
          }
          q.push_back(w);
        }
      }
      if (!found) continue;  // wait for the next wave
      std::vector<int> walk{goal};
      while (walk.back() != cur) walk.push_back(par[walk.back()]);
      std::reverse(walk.begin(), walk.end());
      for (int v : walk) wave_used[v] = 1;
      walks.push_back(std::move(walk));
    }
    std::size_t longest = 0;
    for (const auto& w : walks) longest = std::max(longest, w.size());
    if (longest <= 1) break;  // defensive; cannot happen with a valid state
    for (std::size_t s = 1; s < longest; ++s) {
      std::vector<std::pair<int, int>> step;
      for (const auto& w : walks)
        if (s < w.size())
          step.push_back({std::min(w[s - 1], w[s]), std::max(w[s - 1], w[s])});
      if (step.empty()) continue;
      if (truncate_k > 0) {
        for (std::size_t chunk = 0; chunk < step.size();
             chunk += static_cast<std::size_t>(truncate_k)) {
          std::vector<std::pair<int, int>> part(
              step.begin() + chunk,
              step.begin() + std::min(step.size(), chunk + truncate_k));
          for (const auto& [u, v] : part) st.apply_swap(u, v);
          out->push_back(std::move(part));
        }
      } else {
        for (const auto& [u, v] : step) st.apply_swap(u, v);
        out->push_back(std::move(step));
      }
    }
  }
}

void schedule_phase(const WeightedGraph& g, const PathOracle& oracle,
                    const std::vector<int>& tau, int truncate_k, Schedule* out) {
  const int n = g.num_vertices();
  bool identity = true;
  for (int v = 0; v < n; ++v)
    if (tau[v] != v) {
      identity = false;
      break;
    }
  if (identity) return;
  if (truncate_k <= 0 && is_complete_support(g)) {
    schedule_complete(tau, truncate_k, out);
    return;
  }

  PhaseState st;
  st.n = n;
  st.oracle = &oracle;
  st.pos.resize(n);
  st.occ.resize(n);
  st.target = tau;  // pebble p starts at vertex p and must reach tau[p]
  st.plan.resize(n);
  std::iota(st.pos.begin(), st.pos.end(), 0);
  std::iota(st.occ.begin(), st.occ.end(), 0);
  for (int p = 0; p < n; ++p) st.replan(p);

  auto state_score = [&]() {
    long long rem = 0;
    for (int p = 0; p < n; ++p) rem += static_cast<long long>(st.plan[p].size());
    return rem;
  };
  // Soft budget for the greedy bursts; single finisher waves break the
  // gridlocks in between, and the full finisher closes out the phase.
  const long long budget =
      4 * (state_score() / std::max(1, n / 4) + oracle.diameter()) + 64;

  std::vector<std::pair<int, int>> swaps;
  struct Want {
    int cls;   // 0 mutual, 1 harmless displacement, 2 harmful displacement
    int prio;  // remaining hops (max over wanters)
    int u, v;
  };
  std::vector<Want> wants;
  long long steps_here = 0;
  int stagnant = 0;
  long long best_rem = state_score();
  while (!st.done()) {
    wants.clear();
    for (int p = 0; p < n; ++p) {
      if (st.plan[p].empty()) continue;
      const int u = st.pos[p], v = st.plan[p].front();
      const int rem = static_cast<int>(st.plan[p].size());
      const int q = st.occ[v];
      bool mutual = !st.plan[q].empty() && st.plan[q].front() == u;
      if (mutual && q < p) continue;  // counted once, from the lower pebble
      int cls;
      if (mutual) {
        cls = 0;
      } else {
        const int before = oracle.dist(v, st.target[q]);
        const int after = oracle.dist(u, st.target[q]);
        cls = after <= before ? 1 : 2;
      }
      int prio = rem;
      if (mutual) prio = std::max(rem, static_cast<int>(st.plan[q].size()));
      wants.push_back({cls, prio, std::min(u, v), std::max(u, v)});
    }
    // Deterministic per-step jitter on ties so symmetric contention
    // patterns cannot repeat forever.
    const std::uint64_t salt = Rng::mix(0x737761ull + steps_here);
    auto jitter = [&](const Want& w) {
      return Rng::mix(salt ^ (static_cast<std::uint64_t>(w.u) * 131071 + w.v));
    };
    std::sort(wants.begin(), wants.end(), [&](const Want& a, const Want& b) {
      if (a.cls != b.cls) return a.cls < b.cls;
      if (a.prio != b.prio) return a.prio < b.prio;
      const auto ja = jitter(a), jb = jitter(b);
      if (ja != jb) return ja < jb;
      if (a.u != b.u) return a.u < b.u;
      return a.v < b.v;
    });
    std::vector<char> used(n, 0);
    swaps.clear();
    for (const Want& w : wants) {
      if (used[w.u] || used[w.v]) continue;
      used[w.u] = used[w.v] = 1;
      swaps.push_back({w.u, w.v});
      if (truncate_k > 0 && static_cast<int>(swaps.size()) >= truncate_k) break;
    }
    if (swaps.empty()) break;  // stalled; walk finisher below
    for (const auto& [u, v] : swaps) st.apply_swap(u, v);
    out->push_back(swaps);
    ++steps_here;
    const long long rem_now = state_score();
    if (rem_now < best_rem) {
      best_rem = rem_now;
      stagnant = 0;
    } else {
      ++stagnant;
    }
    if (steps_here > budget || stagnant > 16) break;
  }
  if (!st.done()) finish_by_waves(g, st, truncate_k, out);
}

}  // namespace

Schedule schedule_paths(const WeightedGraph& g, const PathOracle& oracle,
                        const PathSet& ps, int truncate_k) {
  const int n = g.num_vertices();
  Schedule out;
  schedule_phase(g, oracle, ps.sigma, truncate_k, &out);
  // Phase 2: the pebble now at u is sigma^{-1}(u) and wants pi[sigma^{-1}(u)].
  std::vector<int> inv(n), tau2(n);
  for (int v = 0; v < n; ++v) inv[ps.sigma[v]] = v;
  for (int u = 0; u < n; ++u) tau2[u] = ps.pi[inv[u]];
  schedule_phase(g, oracle, tau2, truncate_k, &out);
  return out;
}

std::vector<int> apply_schedule(int n, const Schedule& schedule) {
  std::vector<int> occ(n), pos(n);
  std::iota(occ.begin(), occ.end(), 0);
  std::iota(pos.begin(), pos.end(), 0);
  for (const auto& step : schedule) {
    std::vector<char> used(n, 0);
    for (const auto& [u, v] : step) {
      if (u == v || used[u] || used[v])
        throw ParameterError("schedule: step is not a matching");
      used[u] = used[v] = 1;
      const int a = occ[u], b = occ[v];
      std::swap(occ[u], occ[v]);
      pos[a] = v;
      pos[b] = u;
    }
  }
  return pos;
}

namespace {

RoutingResult route_impl(const WeightedGraph& g, const std::vector<int>& pi,
                         SigmaStrategy strategy, std::uint64_t seed,
                         const PathOracle* oracle, int truncate_k) {
  const int n = g.num_vertices();
  validate_permutation(pi, n);
  RoutingResult rr;
  bool identity = true;
  for (int v = 0; v < n; ++v)
    if (pi[v] != v) {
      identity = false;
      break;
    }
  if (identity) {
    rr.realized = true;
    return rr;
  }
  std::optional<PathOracle> local;
  if (!oracle) local.emplace(g);
  const PathOracle& orc = oracle ? *oracle : *local;
  PathSet ps = valiant_paths(g, orc, pi, strategy, seed);
  rr.schedule = schedule_paths(g, orc, ps, truncate_k);
  rr.depth = static_cast<int>(rr.schedule.size());
  rr.measured_C = ps.congestion;
  rr.measured_D = ps.dilation;
  const auto final_pos = apply_schedule(n, rr.schedule);
  rr.realized = true;
  for (int v = 0; v < n; ++v)
    if (final_pos[v] != pi[v]) {
      rr.realized = false;
      break;
    }
  return rr;
}

}  // namespace

RoutingResult route(const WeightedGraph& g, const std::vector<int>& pi,
                    SigmaStrategy strategy, std::uint64_t seed,
                    const PathOracle* oracle) {
  return route_impl(g, pi, strategy, seed, oracle, 0);
}

RoutingResult partial_matching_route(const WeightedGraph& g, const std::vector<int>& pi,
                                     int capacity, std::uint64_t seed,
                                     const PathOracle* oracle) {
  if (capacity < 1)
    throw ParameterError("partial_matching_route: capacity must be >= 1");
  if (capacity >= g.num_vertices() / 2)
    return route_impl(g, pi, SigmaStrategy{}, seed, oracle, 0);
  return route_impl(g, pi, SigmaStrategy{}, seed, oracle, capacity);
}

double median_route_cd(const WeightedGraph& g, int trials, std::uint64_t seed,
                       const PathOracle* oracle) {
  const int n = g.num_vertices();
  std::optional<PathOracle> local;
  if (!oracle) local.emplace(g);
  const PathOracle& orc = oracle ? *oracle : *local;
  EdgeIndex edges(g);
  std::vector<int> cds;
  cds.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, {0x5043ull, static_cast<std::uint64_t>(t)});
    auto pi = rng.permutation(n);
    auto sigma = rng.permutation(n);
    PathSet ps = two_phase_paths(orc, edges, std::move(sigma), std::move(pi));
    cds.push_back(ps.lmr_depth());
  }
  std::sort(cds.begin(), cds.end());
  const std::size_t m = cds.size();
  return (m % 2 == 1) ? cds[m / 2] : (cds[m / 2 - 1] + cds[m / 2]) / 2.0;
}

}  // namespace hyperroute
