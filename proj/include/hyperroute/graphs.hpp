#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperroute/rng.hpp"

namespace hyperroute {

/// r-uniform hypergraph. Hyperedges are stored as sorted vertex sets; each
/// edge additionally carries a distinguished "base point" used by voltage
/// lifts (for projective planes this is the generating point of the line,
/// for grid hypergraphs the starting cell of the run).
struct Hypergraph {
  int num_vertices = 0;
  std::vector<std::vector<int>> hyperedges;
  std::vector<int> base_points;
  int d = 0;  // hyperedges per vertex when regular
  int r = 0;  // uniformity
  bool regular = false;

  int num_hyperedges() const { return static_cast<int>(hyperedges.size()); }
  std::vector<int> vertex_degrees() const;
  void validate() const;  // throws ParameterError on a broken invariant
};

/// Symmetric integer-weighted graph with zero diagonal.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : nbrs_(n) {}

  int num_vertices() const { return static_cast<int>(nbrs_.size()); }
  void add_edge_weight(int u, int v, int w);
  int weight(int u, int v) const;

  /// Sorted (neighbor, weight) list.
  const std::vector<std::pair<int, int>>& neighbors(int u) const { return nbrs_[u]; }
  std::vector<std::vector<int>> support_adjacency() const;

  long long weighted_degree(int u) const;
  /// True when all weighted degrees agree; the common degree goes to *deg.
  bool regular(long long* deg = nullptr) const;

  int num_support_edges() const;
  /// Support edges (u < v) with weights, sorted.
  std::vector<std::array<int, 3>> edges() const;

  /// Same support with every weight clamped to 1.
  WeightedGraph simple_support() const;

  std::vector<double> dense_adjacency() const;

  bool operator==(const WeightedGraph& o) const { return nbrs_ == o.nbrs_; }

 private:
  std::vector<std::vector<std::pair<int, int>>> nbrs_;
};

/// Per-hyperedge Z_k voltages plus the lift rule used to place sheets.
enum class LiftConvention {
  kBaseShift,  // the base point of each hyperedge moves up s_e sheets
  kLastShift,  // the largest vertex moves up s_e sheets
  kRotation,   // i-th smallest vertex moves up (i-1)*s_e sheets
};

const char* to_string(LiftConvention c);
LiftConvention lift_convention_from_string(const std::string& s);

struct VoltageAssignment {
  Hypergraph base;
  int k = 2;
  std::vector<int> voltages;  // one element of Z_k per base hyperedge
  LiftConvention convention = LiftConvention::kBaseShift;

  void validate() const;
};

enum class GridModel { k2D, k3D };

/// n x n periodic grid with runs of r consecutive cells as hyperedges.
struct GridSpec {
  int n = 8;
  int r = 3;
  GridModel model = GridModel::k2D;
};

// Builders. All are pure given (params, seed).

/// Point-line incidence hypergraph of PG(2,q), q in {2, 3}.
Hypergraph build_projective_plane(int q);

/// (d,r)-regular hypergraph via the configuration model with full restart
/// on any hyperedge containing a repeated vertex.
Hypergraph build_random_regular_hypergraph(int num_vertices, int d, int r,
                                           std::uint64_t seed,
                                           int max_restarts = 1000);

/// Periodic grid hypergraph. 2D: runs of r consecutive cells along every
/// row and column. 3D: adds diagonal runs (both directions) and stride-2
/// skip runs along rows and columns. Duplicate and degenerate runs are
/// dropped.
Hypergraph build_grid_hypergraph(const GridSpec& spec);

/// Weight on {u,v} = number of hyperedges containing both.
WeightedGraph clique_expansion(const Hypergraph& h);

/// Simple d-regular graph sampled by stub pairing; defective pairs are
/// re-queued and re-shuffled, with a full restart if pairing stalls.
WeightedGraph build_random_regular_graph(int num_vertices, int d,
                                         std::uint64_t seed,
                                         int max_restarts = 1000);

/// Edgewise weight sum of graphs on a common vertex set.
WeightedGraph union_layers(const std::vector<WeightedGraph>& layers);

/// k-fold lift; vertex (v, sheet) has index sheet*N + v. Lifted hyperedges
/// are emitted base-edge-major, then sheet 0..k-1; lifted base points track
/// the base edge's base point.
Hypergraph voltage_covering(const VoltageAssignment& va);

/// Cayley graph on Z_n^2, vertex (a,b) -> a*n+b. The generator set is
/// symmetrized automatically; zero generators are rejected.
WeightedGraph build_cayley_graph(int n, const std::vector<std::pair<int, int>>& generators);

}  // namespace hyperroute
