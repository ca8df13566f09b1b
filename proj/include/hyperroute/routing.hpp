#pragma once

#include <cstdint>
#include <vector>

#include "hyperroute/graphs.hpp"

namespace hyperroute {

/// All-pairs shortest-path oracle with deterministic tie-breaking: the BFS
/// parent of a vertex is the lowest-index vertex on the previous level.
class PathOracle {
 public:
  explicit PathOracle(const WeightedGraph& g);  // throws on disconnected input

  int num_vertices() const { return n_; }
  int dist(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int diameter() const { return diameter_; }

  /// Vertex sequence from u to v inclusive; {u} is the empty walk.
  std::vector<int> path(int u, int v) const;

 private:
  int n_ = 0;
  int diameter_ = 0;
  std::vector<std::int32_t> parent_;
  std::vector<std::uint16_t> dist_;
};

/// Dense index over support edges (u < v), for congestion accounting.
class EdgeIndex {
 public:
  explicit EdgeIndex(const WeightedGraph& g);
  int count() const { return count_; }
  int index(int u, int v) const;

 private:
  std::vector<int> offset_;
  std::vector<int> upper_;  // per-u sorted neighbors v > u
  int count_ = 0;
};

/// Two-phase path system for one routing instance. Congestion counts the
/// two phases separately and reports the max; dilation likewise (phases are
/// scheduled one after the other).
struct PathSet {
  std::vector<int> sigma;                 // intermediate permutation
  std::vector<int> pi;                    // target permutation
  std::vector<std::vector<int>> scatter;  // pebble v: walk v -> sigma[v]
  std::vector<std::vector<int>> gather;   // pebble v: walk sigma[v] -> pi[v]
  int congestion = 0;                     // C = max(C1, C2)
  int dilation = 0;                       // D = max(D1, D2)
  int c1 = 0, c2 = 0, d1 = 0, d2 = 0;

  int lmr_depth() const { return congestion + dilation; }
};

enum class SigmaKind { kUniformRandom, kDerandomized, kIdentity };

struct SigmaStrategy {
  SigmaKind kind = SigmaKind::kUniformRandom;
};

/// One matching per step; pairs are support edges, vertex-disjoint within a
/// step.
using Schedule = std::vector<std::vector<std::pair<int, int>>>;

struct RoutingResult {
  int depth = 0;  // |schedule|
  Schedule schedule;
  int measured_C = 0;
  int measured_D = 0;
  bool realized = false;

  int lmr_depth() const { return measured_C + measured_D; }
};

void validate_permutation(const std::vector<int>& pi, int n);

/// Canonical two-phase walks for an explicit sigma, with measured C and D.
PathSet two_phase_paths(const PathOracle& oracle, const EdgeIndex& edges,
                        std::vector<int> sigma, std::vector<int> pi);

/// Valiant path construction under the chosen sigma strategy.
PathSet valiant_paths(const WeightedGraph& g, const PathOracle& oracle,
                      const std::vector<int>& pi, SigmaStrategy strategy,
                      std::uint64_t seed);

/// Intermediate permutation by conditional expectations on the exponential
/// congestion potential (lambda = ln N / max(D, 1), realized loads only).
std::vector<int> derandomized_sigma(const WeightedGraph& g, const PathOracle& oracle,
                                    const std::vector<int>& pi);

/// Matching schedule that advances every pebble through its scatter and
/// gather walks, one phase at a time. Mutual swaps go first, then swaps
/// that do not push the displaced pebble away from its goal; within a
/// class, pebbles with the fewest remaining hops win (arrivals unclog the
/// endgame), with deterministic per-step jitter on ties. A wave-packed
/// walk finisher guarantees termination when the greedy loop stalls. On a
/// complete support an exact two-matching decomposition is used per phase.
/// truncate_k > 0 caps every step at the k highest-priority swaps.
Schedule schedule_paths(const WeightedGraph& g, const PathOracle& oracle,
                        const PathSet& ps, int truncate_k = 0);

/// Applies the schedule to the identity placement and reports where each
/// pebble ends up.
std::vector<int> apply_schedule(int n, const Schedule& schedule);

RoutingResult route(const WeightedGraph& g, const std::vector<int>& pi,
                    SigmaStrategy strategy, std::uint64_t seed,
                    const PathOracle* oracle = nullptr);

RoutingResult partial_matching_route(const WeightedGraph& g, const std::vector<int>& pi,
                                     int capacity, std::uint64_t seed,
                                     const PathOracle* oracle = nullptr);

/// Median over `trials` random permutations of the LMR depth C + D under
/// uniform sigma; the workhorse behind the routing-depth tables.
double median_route_cd(const WeightedGraph& g, int trials, std::uint64_t seed,
                       const PathOracle* oracle = nullptr);

}  // namespace hyperroute
