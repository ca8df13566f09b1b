#include "hyperroute/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "hyperroute/eigen.hpp"
#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"

namespace hyperroute {

namespace {
constexpr double kTol = 1e-9;
}

std::vector<double> adjacency_eigenvalues(const WeightedGraph& g, int dense_budget) {
  const int n = g.num_vertices();
  if (n > dense_budget) {
    std::ostringstream msg;
    msg << "spectrum: N = " << n << " exceeds the dense eigensolve budget "
        << dense_budget << "; use spectrum_extreme (iterative lambda2/lambdaN)";
    throw ResourceError(msg.str());
  }
  return symmetric_eigenvalues(g.dense_adjacency(), n);
}

SpectralSummary summarize_spectrum(const std::vector<double>& eigs, double degree) {
  SpectralSummary s;
  if (eigs.empty()) return s;
  s.lambda1 = eigs.front();
  s.lambda2 = eigs.size() > 1 ? eigs[1] : eigs[0];
  s.lambdaN = eigs.back();
  s.lambda_star = std::max(s.lambda2, std::fabs(s.lambdaN));
  s.degree = degree;
  s.beta = degree > 0 ? s.lambda_star / degree : 0.0;
  s.ramanujan = degree > 1 && s.lambda_star <= 2.0 * std::sqrt(degree - 1.0) + kTol;
  if (s.beta < 1.0 && s.lambda_star > 0) {
    const int n = static_cast<int>(eigs.size());
    s.diameter_bound = diameter_bound(n, degree, s.lambda_star).chung;
  }
  return s;
}

SpectralSummary spectrum(const WeightedGraph& g, int dense_budget) {
  auto eigs = adjacency_eigenvalues(g, dense_budget);
  long long deg = 0;
  const double d_prime = g.regular(&deg) ? static_cast<double>(deg) : eigs.front();
  return summarize_spectrum(eigs, d_prime);
}

SpectralSummary spectrum_extreme(const WeightedGraph& g, int iterations) {
  const int n = g.num_vertices();
  if (n < 2) throw ParameterError("spectrum_extreme: need N >= 2");
  long long deg = 0;
  const bool reg = g.regular(&deg);

  std::vector<double> top(n, 1.0 / std::sqrt(static_cast<double>(n)));
  auto matvec = [&](const std::vector<double>& x, std::vector<double>& y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (int u = 0; u < n; ++u)
      for (const auto& [v, w] : g.neighbors(u)) y[u] += w * x[v];
  };
  auto normalize = [&](std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    if (s > 0)
      for (double& v : x) v /= s;
    return s;
  };
  double lambda1;
  if (reg) {
    lambda1 = static_cast<double>(deg);
  } else {
    Rng rng(0x746f70);
    std::vector<double> x(n), y(n);
    for (double& v : x) v = rng.uniform() - 0.5;
    normalize(x);
    for (int it = 0; it < iterations; ++it) {
      matvec(x, y);
      normalize(y);
      x.swap(y);
    }
    matvec(x, y);
    lambda1 = 0;
    for (int i = 0; i < n; ++i) lambda1 += x[i] * y[i];
    top = x;
  }
  auto deflate = [&](std::vector<double>& x) {
    double dot = 0;
    for (int i = 0; i < n; ++i) dot += x[i] * top[i];
    for (int i = 0; i < n; ++i) x[i] -= dot * top[i];
  };
  // lambda2: power iteration on (A + lambda1 I) restricted to top-perp; the
  // shift keeps the spectrum nonnegative so the iteration cannot lock onto
  // lambdaN by magnitude.
  Rng rng(0x657874);
  std::vector<double> x(n), y(n);
  for (double& v : x) v = rng.uniform() - 0.5;
  deflate(x);
  normalize(x);
  for (int it = 0; it < iterations; ++it) {
    matvec(x, y);
    for (int i = 0; i < n; ++i) y[i] += lambda1 * x[i];
    deflate(y);
    normalize(y);
    x.swap(y);
  }
  matvec(x, y);
  double lambda2 = 0;
  for (int i = 0; i < n; ++i) lambda2 += x[i] * y[i];
  // lambdaN via power iteration on (lambda1 I - A).
  for (double& v : x) v = rng.uniform() - 0.5;
  normalize(x);
  for (int it = 0; it < iterations; ++it) {
    matvec(x, y);
    for (int i = 0; i < n; ++i) y[i] = lambda1 * x[i] - y[i];
    normalize(y);
    x.swap(y);
  }
  matvec(x, y);
  double rq = 0;
  for (int i = 0; i < n; ++i) rq += x[i] * (lambda1 * x[i] - y[i]);
  const double lambdaN = lambda1 - rq;

  SpectralSummary s;
  s.lambda1 = lambda1;
  s.lambda2 = lambda2;
  s.lambdaN = lambdaN;
  s.lambda_star = std::max(lambda2, std::fabs(lambdaN));
  s.degree = lambda1;
  s.beta = s.lambda_star / lambda1;
  s.ramanujan = s.lambda_star <= 2.0 * std::sqrt(lambda1 - 1.0) + kTol;
  if (s.beta < 1.0 && s.lambda_star > 0)
    s.diameter_bound = diameter_bound(n, s.degree, s.lambda_star).chung;
  return s;
}

bool check_ramanujan_hypergraph(const Hypergraph& h, const SpectralSummary& s) {
  if (!h.regular)
    throw ParameterError("check_ramanujan_hypergraph: hypergraph must be regular");
  const double center = h.r - 2.0;
  const double rho = 2.0 * std::sqrt(static_cast<double>(h.d - 1) * (h.r - 1));
  return s.lambda2 <= center + rho + kTol && s.lambdaN >= center - rho - kTol;
}

bool check_ramanujan_graph(int d, const SpectralSummary& s) {
  return s.lambda_star <= 2.0 * std::sqrt(d - 1.0) + kTol;
}

LambdaStarBound lambda_star_bound(int d, int r) {
  if (d < 3 || r < 3)
    throw ParameterError("lambda_star_bound: requires d >= 3 and r >= 3");
  LambdaStarBound b;
  b.lambda_star = (r - 2.0) + 2.0 * std::sqrt(static_cast<double>(d - 1) * (r - 1));
  b.beta_bound = b.lambda_star / (static_cast<double>(d) * (r - 1));
  return b;
}

DiameterBound diameter_bound(int num_vertices, double d_prime, double lambda_star) {
  if (lambda_star <= 0 || lambda_star >= d_prime)
    throw DomainError("diameter_bound: requires 0 < lambda* < d'");
  DiameterBound b;
  b.chung = static_cast<int>(
      std::ceil(std::log(num_vertices - 1.0) / std::log(d_prime / lambda_star) - kTol));
  const double beta = lambda_star / d_prime;
  b.eq3 = static_cast<int>(
      std::ceil(2.0 * std::log2(static_cast<double>(num_vertices)) /
                    std::log2(1.0 / beta) - kTol));
  return b;
}

int exact_diameter(const WeightedGraph& g) {
  const int n = g.num_vertices();
  const auto adj = g.support_adjacency();
  int diam = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    int seen = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      diam = std::max(diam, dist[u]);
      for (int v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
          ++seen;
        }
    }
    if (seen != n) return -1;  // disconnected: infinite diameter
  }
  return diam;
}

double cheeger_lower_bound(double d_prime, double lambda2) {
  return (d_prime - lambda2) / 2.0;
}

RoutingBound tight_routing_bound(int d, int r, int num_vertices) {
  if (num_vertices < 16)
    throw ParameterError("tight_routing_bound: requires N >= 16");
  const auto lsb = lambda_star_bound(d, r);  // also validates d, r
  const double d_prime = static_cast<double>(d) * (r - 1);
  RoutingBound out;
  out.log2_coefficient =
      4.0 * (d_prime + 6.0) / (d_prime * std::log2(1.0 / lsb.beta_bound)) + 19.0;
  out.total = out.log2_coefficient * std::log2(static_cast<double>(num_vertices));
  return out;
}

}  // namespace hyperroute
