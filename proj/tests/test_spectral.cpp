#include <cmath>

#include "doctest.h"
#include "hyperroute/error.hpp"
#include "hyperroute/graphs.hpp"
#include "hyperroute/spectral.hpp"

using namespace hyperroute;

TEST_CASE("K7 summary: eigenvalues, beta, band membership") {
  auto fano = build_projective_plane(2);
  auto g = clique_expansion(fano);
  auto s = spectrum(g);
  CHECK(s.lambda1 == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(s.lambda2 == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(s.lambdaN == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(s.beta == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  CHECK(check_ramanujan_hypergraph(fano, s));
  CHECK(s.diameter_bound >= exact_diameter(g));
  CHECK(exact_diameter(g) == 1);
}

TEST_CASE("trace identities on a random clique expansion") {
  auto h = build_random_regular_hypergraph(24, 3, 3, 11);
  auto g = clique_expansion(h);
  auto eigs = adjacency_eigenvalues(g);
  double sum = 0, sum2 = 0;
  for (double v : eigs) {
    sum += v;
    sum2 += v * v;
  }
  double frob = 0;
  for (const auto& [u, v, w] : g.edges()) frob += 2.0 * w * w;
  CHECK(sum == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(sum2 == doctest::Approx(frob).epsilon(1e-6));
}

TEST_CASE("ramanujan hypergraph check: boundary inclusive, grids fail") {
  auto fano = build_projective_plane(2);
  SpectralSummary s;
  s.lambda1 = 6;
  s.lambda2 = 1.0 + 4.0;  // exactly (r-2) + 2 sqrt((d-1)(r-1))
  s.lambdaN = -3.0;
  CHECK(check_ramanujan_hypergraph(fano, s));
  s.lambda2 = 5.0 + 1e-6;
  CHECK_FALSE(check_ramanujan_hypergraph(fano, s));

  auto grid = build_grid_hypergraph({16, 3, GridModel::k2D});
  auto gs = spectrum(clique_expansion(grid));
  CHECK_FALSE(check_ramanujan_hypergraph(grid, gs));
  Hypergraph irregular;
  irregular.num_vertices = 4;
  irregular.r = 3;
  irregular.hyperedges = {{0, 1, 2}};
  CHECK_THROWS_AS(check_ramanujan_hypergraph(irregular, gs), ParameterError);
}

TEST_CASE("ramanujan graph check") {
  // complete graph K_{d+1}: lambda* = 1
  SpectralSummary s;
  s.lambda2 = -1;
  s.lambdaN = -1;
  s.lambda_star = 1;
  CHECK(check_ramanujan_graph(8, s));
  s.lambda_star = 2.0 * std::sqrt(7.0) + 1e-3;
  CHECK_FALSE(check_ramanujan_graph(8, s));
}

TEST_CASE("lambda_star_bound published rows") {
  struct Row {
    int d, r;
    double value, beta;
  };
  const Row rows[] = {{3, 3, 5.0, 0.833}, {5, 3, 6.657, 0.666}, {10, 5, 15.0, 0.375}};
  for (const auto& row : rows) {
    auto b = lambda_star_bound(row.d, row.r);
    CHECK(b.lambda_star == doctest::Approx(row.value).epsilon(1e-3));
    CHECK(b.beta_bound == doctest::Approx(row.beta).epsilon(1e-3));
  }
  CHECK_THROWS_AS(lambda_star_bound(2, 3), ParameterError);
}

TEST_CASE("diameter bound: complete graph, Eq.(3) arithmetic, near-degenerate") {
  auto b = diameter_bound(7, 6.0, 1.0);
  CHECK(b.chung == 1);
  // (3,3) at N = 64: ceil(2*6 / log2(6/5)) = 46
  auto b2 = diameter_bound(64, 6.0, 5.0);
  CHECK(b2.eq3 == 46);
  auto b3 = diameter_bound(100, 1.0, 0.9999);
  CHECK(b3.eq3 > 0);  // large but finite
  CHECK_THROWS_AS(diameter_bound(10, 5.0, 5.0), DomainError);
}

TEST_CASE("exact diameter: path and disconnected graphs") {
  WeightedGraph p4(4);
  p4.add_edge_weight(0, 1, 1);
  p4.add_edge_weight(1, 2, 1);
  p4.add_edge_weight(2, 3, 1);
  CHECK(exact_diameter(p4) == 3);
  WeightedGraph disc(4);
  disc.add_edge_weight(0, 1, 1);
  disc.add_edge_weight(2, 3, 1);
  CHECK(exact_diameter(disc) == -1);
  // 8x8 grid expansion diameter 4 (published D column)
  auto g8 = clique_expansion(build_grid_hypergraph({8, 3, GridModel::k2D}));
  CHECK(exact_diameter(g8) == 4);
}

TEST_CASE("cheeger lower bound") {
  CHECK(cheeger_lower_bound(6, -1) == doctest::Approx(3.5));
  CHECK(cheeger_lower_bound(6, 5) == doctest::Approx(0.5));
  CHECK(cheeger_lower_bound(6, 6) == doctest::Approx(0.0));
}

TEST_CASE("tight routing bound coefficients") {
  CHECK(tight_routing_bound(3, 3, 64).log2_coefficient == doctest::Approx(49).epsilon(0.03));
  CHECK(tight_routing_bound(5, 5, 64).log2_coefficient == doctest::Approx(25).epsilon(0.03));
  CHECK(tight_routing_bound(10, 3, 64).log2_coefficient == doctest::Approx(24).epsilon(0.03));
  CHECK_THROWS_AS(tight_routing_bound(3, 3, 8), ParameterError);
}

TEST_CASE("spectrum budget error and extreme-pair fallback") {
  auto g = build_random_regular_graph(128, 6, 3);
  CHECK_THROWS_AS(adjacency_eigenvalues(g, 64), ResourceError);
  auto dense = spectrum(g);
  auto ext = spectrum_extreme(g, 4000);
  CHECK(ext.lambda2 == doctest::Approx(dense.lambda2).epsilon(0.02));
  CHECK(ext.lambdaN == doctest::Approx(dense.lambdaN).epsilon(0.05));
}

TEST_CASE("analytic diameter bound dominates the exact diameter") {
  auto check_one = [](const WeightedGraph& g) {
    auto s = spectrum(g);
    if (s.beta < 1.0) CHECK(s.diameter_bound >= exact_diameter(g));
  };
  check_one(clique_expansion(build_projective_plane(2)));
  check_one(clique_expansion(build_projective_plane(3)));
  check_one(build_random_regular_graph(64, 6, 4));
  check_one(build_random_regular_graph(128, 8, 5));
}

TEST_CASE("non-regular graphs measure beta against lambda1") {
  WeightedGraph p4(4);
  p4.add_edge_weight(0, 1, 1);
  p4.add_edge_weight(1, 2, 1);
  p4.add_edge_weight(2, 3, 1);
  auto s = spectrum(p4);
  CHECK(s.degree == doctest::Approx(s.lambda1));
  CHECK(s.beta == doctest::Approx(s.lambda_star / s.lambda1));
}

TEST_CASE("grid beta invariant under uniform weight scaling") {
  auto g = clique_expansion(build_grid_hypergraph({8, 3, GridModel::k2D}));
  auto doubled = union_layers({g, g});
  CHECK(spectrum(doubled).beta == doctest::Approx(spectrum(g).beta).epsilon(1e-9));
}
