#pragma once

#include <vector>

#include "hyperroute/graphs.hpp"

namespace hyperroute {

/// Summary of an adjacency spectrum. beta is measured against the weighted
/// degree d' for regular graphs and against lambda1 otherwise.
struct SpectralSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambdaN = 0.0;
  double lambda_star = 0.0;  // max(lambda2, |lambdaN|)
  double beta = 0.0;
  double degree = 0.0;       // d' used as the beta denominator
  bool ramanujan = false;    // graph-flavor bound lambda* <= 2 sqrt(d'-1)
  int diameter_bound = 0;    // 0 when beta >= 1 (bound vacuous)
};

/// Full adjacency spectrum, sorted descending. Dense solve; graphs over
/// `dense_budget` vertices are rejected with a ResourceError.
std::vector<double> adjacency_eigenvalues(const WeightedGraph& g,
                                          int dense_budget = 10000);

SpectralSummary summarize_spectrum(const std::vector<double>& eigs, double degree);

/// Dense eigensolve + summary. For non-regular graphs d' := lambda1.
SpectralSummary spectrum(const WeightedGraph& g, int dense_budget = 10000);

/// Iterative extreme-pair fallback: lambda2 and lambdaN only, via power
/// iteration with deflation of the top eigenvector.
SpectralSummary spectrum_extreme(const WeightedGraph& g, int iterations = 3000);

/// SFM band check: all nontrivial eigenvalues within 2 sqrt((d-1)(r-1)) of
/// r-2 (boundary inclusive at 1e-9). Requires a regular hypergraph and a
/// summary computed from its clique expansion.
bool check_ramanujan_hypergraph(const Hypergraph& h, const SpectralSummary& s);

/// Graph bound lambda* <= 2 sqrt(d-1) + 1e-9 for a d-regular graph.
bool check_ramanujan_graph(int d, const SpectralSummary& s);

struct LambdaStarBound {
  double lambda_star;  // (r-2) + 2 sqrt((d-1)(r-1))
  double beta_bound;   // lambda_star / (d (r-1))
};

/// Upper end of the SFM band (it dominates |lambdaN| for r >= 3).
LambdaStarBound lambda_star_bound(int d, int r);

struct DiameterBound {
  int chung;    // ceil(log(N-1) / log(d'/lambda*))
  int eq3;      // ceil(2 log2 N / log2(1/beta))
};

DiameterBound diameter_bound(int num_vertices, double d_prime, double lambda_star);

/// BFS diameter of the support; -1 when disconnected.
int exact_diameter(const WeightedGraph& g);

double cheeger_lower_bound(double d_prime, double lambda2);

struct RoutingBound {
  double total;           // full RHS of the tightened routing bound
  double log2_coefficient;  // 4(d'+6)/(d' log2(1/beta)) + 19
};

RoutingBound tight_routing_bound(int d, int r, int num_vertices);

}  // namespace hyperroute
