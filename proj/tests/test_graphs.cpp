#include <set>
#include <sstream>
#include <tuple>

#include "doctest.h"
#include "hyperroute/error.hpp"
#include "hyperroute/graphs.hpp"
#include "hyperroute/io.hpp"
#include "hyperroute/spectral.hpp"

using namespace hyperroute;

TEST_CASE("projective planes PG(2,2) and PG(2,3)") {
  auto fano = build_projective_plane(2);
  CHECK(fano.num_vertices == 7);
  CHECK(fano.num_hyperedges() == 7);
  CHECK(fano.d == 3);
  CHECK(fano.r == 3);
  for (int deg : fano.vertex_degrees()) CHECK(deg == 3);
  // every pair of points on exactly one line -> clique expansion is K7
  auto g = clique_expansion(fano);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) CHECK(g.weight(u, v) == 1);
  long long deg = 0;
  CHECK(g.regular(&deg));
  CHECK(deg == 6);

  auto pg3 = build_projective_plane(3);
  CHECK(pg3.num_vertices == 13);
  CHECK(pg3.num_hyperedges() == 13);
  CHECK(pg3.d == 4);
  CHECK(pg3.r == 4);
  for (int d : pg3.vertex_degrees()) CHECK(d == 4);
  CHECK_THROWS_AS(build_projective_plane(4), ParameterError);
}

TEST_CASE("clique expansion basics") {
  Hypergraph h;
  h.num_vertices = 4;
  h.r = 3;
  h.hyperedges = {{0, 1, 2}, {0, 1, 3}};
  auto g = clique_expansion(h);
  CHECK(g.weight(0, 1) == 2);
  CHECK(g.weight(0, 2) == 1);
  CHECK(g.weight(2, 3) == 0);
  Hypergraph tri;
  tri.num_vertices = 3;
  tri.r = 3;
  tri.hyperedges = {{0, 1, 2}};
  auto t = clique_expansion(tri);
  CHECK(t.weight(0, 1) == 1);
  CHECK(t.weight(1, 2) == 1);
  CHECK(t.weight(0, 2) == 1);
}

TEST_CASE("random regular hypergraph: regularity, determinism, errors") {
  auto h = build_random_regular_hypergraph(7, 3, 3, 5);
  CHECK(h.num_hyperedges() == 7);
  for (int deg : h.vertex_degrees()) CHECK(deg == 3);
  auto h1 = build_random_regular_hypergraph(64, 3, 3, 1);
  auto h2 = build_random_regular_hypergraph(64, 3, 3, 1);
  CHECK(h1.hyperedges == h2.hyperedges);
  CHECK_THROWS_AS(build_random_regular_hypergraph(5, 3, 4, 0), ParameterError);
}

TEST_CASE("random regular graph: simplicity, regularity, determinism") {
  auto g = build_random_regular_graph(100, 8, 3);
  long long deg = 0;
  CHECK(g.regular(&deg));
  CHECK(deg == 8);
  for (const auto& [u, v, w] : g.edges()) {
    CHECK(w == 1);
    CHECK(u != v);
  }
  auto g2 = build_random_regular_graph(100, 8, 3);
  CHECK(g == g2);
  CHECK_THROWS_AS(build_random_regular_graph(5, 3, 0), ParameterError);
  CHECK_THROWS_AS(build_random_regular_graph(6, 7, 0), ParameterError);
}

TEST_CASE("union layers adds degrees; doubling keeps beta") {
  WeightedGraph m1(4), m2(4);
  m1.add_edge_weight(0, 1, 1);
  m1.add_edge_weight(2, 3, 1);
  m2.add_edge_weight(0, 2, 1);
  m2.add_edge_weight(1, 3, 1);
  auto u = union_layers({m1, m2});
  long long deg = 0;
  CHECK(u.regular(&deg));
  CHECK(deg == 2);
  auto g = build_random_regular_graph(64, 4, 9);
  auto doubled = union_layers({g, g});
  for (const auto& [a, b, w] : doubled.edges()) CHECK(w == 2);
  auto s1 = spectrum(g);
  auto s2 = spectrum(doubled);
  CHECK(s2.beta == doctest::Approx(s1.beta).epsilon(1e-12));
  WeightedGraph bad(5);
  CHECK_THROWS_AS(union_layers({m1, bad}), ParameterError);
}

TEST_CASE("grid hypergraph: counts, degrees, periodic structure") {
  auto tiny = build_grid_hypergraph({3, 3, GridModel::k2D});
  CHECK(tiny.num_hyperedges() == 6);  // one distinct run per row/column
  auto g8 = build_grid_hypergraph({8, 3, GridModel::k2D});
  CHECK(g8.num_hyperedges() == 2 * 8 * 8);
  CHECK(g8.regular);
  CHECK(g8.d == 6);
  // simple expansion degree 8 everywhere (the spectral-table convention)
  auto s = clique_expansion(g8).simple_support();
  long long deg = 0;
  CHECK(s.regular(&deg));
  CHECK(deg == 8);
  auto g83 = build_grid_hypergraph({8, 3, GridModel::k3D});
  auto s3 = clique_expansion(g83).simple_support();
  CHECK(s3.regular(&deg));
  CHECK(deg == 18);  // the +/-4 skips collapse at n = 8
  auto g10 = clique_expansion(build_grid_hypergraph({10, 3, GridModel::k3D})).simple_support();
  CHECK(g10.regular(&deg));
  CHECK(deg == 20);
  CHECK_THROWS_AS(build_grid_hypergraph({2, 3, GridModel::k2D}), ParameterError);
}

TEST_CASE("3D grid drops degenerate wrapped runs at small n") {
  // at n = 4 the stride-2 skip runs wrap onto themselves and are dropped
  auto h = build_grid_hypergraph({4, 3, GridModel::k3D});
  for (const auto& e : h.hyperedges) {
    CHECK(e.size() == 3);
    CHECK(e[0] != e[1]);
    CHECK(e[1] != e[2]);
  }
}

TEST_CASE("voltage covering: trivial lift duplicates the base spectrum") {
  auto fano = build_projective_plane(2);
  VoltageAssignment va;
  va.base = fano;
  va.k = 2;
  va.voltages.assign(7, 0);
  auto lift = voltage_covering(va);
  CHECK(lift.num_vertices == 14);
  CHECK(lift.num_hyperedges() == 14);
  for (int deg : lift.vertex_degrees()) CHECK(deg == 3);
  auto le = adjacency_eigenvalues(clique_expansion(lift));
  auto be = adjacency_eigenvalues(clique_expansion(fano));
  // multiset equality with each base eigenvalue doubled
  for (std::size_t i = 0; i < be.size(); ++i) {
    CHECK(le[2 * i] == doctest::Approx(be[i]).epsilon(1e-9));
    CHECK(le[2 * i + 1] == doctest::Approx(be[i]).epsilon(1e-9));
  }
}

TEST_CASE("voltage covering: published best assignment and its new eigenvalues") {
  auto fano = build_projective_plane(2);
  VoltageAssignment va;
  va.base = fano;
  va.k = 2;
  va.voltages = {1, 0, 1, 1, 0, 1, 1};
  va.convention = LiftConvention::kBaseShift;
  auto lift = voltage_covering(va);
  auto eigs = adjacency_eigenvalues(clique_expansion(lift));
  // lift spectrum = base {6, -1 x6} plus {3, 3, 1, 1, -2, -3, -3}
  const double expected[] = {6, 3, 3, 1, 1, -1, -1, -1, -1, -1, -1, -2, -3, -3};
  REQUIRE(eigs.size() == 14);
  for (int i = 0; i < 14; ++i)
    CHECK(eigs[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  auto s = spectrum(clique_expansion(lift));
  CHECK(s.beta == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("cayley graph builder") {
  auto t = build_cayley_graph(3, {{1, 0}, {0, 1}});
  long long deg = 0;
  CHECK(t.regular(&deg));
  CHECK(deg == 4);  // C3 x C3 torus
  CHECK(t.num_vertices() == 9);
  CHECK_THROWS_AS(build_cayley_graph(5, {{0, 0}}), ParameterError);
}

TEST_CASE("clique expansion of regular hypergraphs has degree d(r-1)") {
  const std::tuple<int, int, int> cases[] = {{24, 3, 3}, {20, 4, 4}, {30, 5, 3}};
  for (auto [N, d, r] : cases) {
    auto h = build_random_regular_hypergraph(N, d, r, 77);
    auto g = clique_expansion(h);
    for (int v = 0; v < N; ++v)
      CHECK(g.weighted_degree(v) == static_cast<long long>(d) * (r - 1));
  }
}

TEST_CASE("serialization round-trips") {
  auto fano = build_projective_plane(2);
  std::stringstream ss;
  write_hypergraph(ss, fano);
  auto back = read_hypergraph(ss);
  CHECK(back.hyperedges == fano.hyperedges);
  CHECK(back.base_points == fano.base_points);
  CHECK(back.d == 3);
  CHECK(back.regular);

  auto g = build_random_regular_graph(20, 3, 4);
  std::stringstream gs;
  write_graph(gs, g);
  auto gback = read_graph(gs);
  CHECK(gback == g);
}
