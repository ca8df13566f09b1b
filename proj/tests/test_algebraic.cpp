#include <cmath>

#include <algorithm>

#include "doctest.h"
#include "hyperroute/algebraic.hpp"
#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"

using namespace hyperroute;

TEST_CASE("character sums: closed-form torus eigenvalue") {
  // generators {(1,0),(0,1)} on Z_4^2: lambda_(2,2) = 2cos(pi)+2cos(pi) = -4
  auto vals = cayley_character_eigenvalues(4, {{1, 0}, {0, 1}});
  CHECK(vals.back() == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(vals.front() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("qr family anchors lambda*") {
  GeneratorFamily qr;
  const std::pair<int, double> anchors[] = {
      {7, 5.74}, {11, 6.46}, {17, 7.21}, {31, 7.76}, {53, 7.92}, {97, 7.98}};
  for (const auto& [p, expect] : anchors) {
    auto s = cayley_spectrum_characters(p, qr.generators(p));
    CHECK(s.lambda_star == doctest::Approx(expect).epsilon(0.002));
  }
  // ratio lambda*/(2 sqrt 7) at p=7 is 1.08
  auto s7 = cayley_spectrum_characters(7, qr.generators(7));
  CHECK(s7.lambda_star / (2.0 * std::sqrt(7.0)) == doctest::Approx(1.08).epsilon(0.01));
}

TEST_CASE("character spectrum equals dense eigensolve") {
  GeneratorFamily qr;
  auto gens = qr.generators(7);
  auto chars = cayley_character_eigenvalues(7, gens);
  auto dense = adjacency_eigenvalues(build_cayley_graph(7, gens));
  REQUIRE(chars.size() == dense.size());
  for (std::size_t i = 0; i < chars.size(); ++i)
    CHECK(chars[i] == doctest::Approx(dense[i]).epsilon(1e-6));
}

TEST_CASE("margulis family row") {
  GeneratorFamily mg{"margulis", 8, 0};
  const std::pair<int, double> rows[] = {
      {7, 0.718}, {11, 0.881}, {17, 0.949}, {31, 0.985}, {41, 0.991}};
  for (const auto& [n, expect] : rows) {
    auto s = cayley_spectrum_characters(n, mg.generators(n));
    CHECK(s.lambda2 / 8.0 == doctest::Approx(expect).epsilon(0.003));
  }
}

TEST_CASE("barrier scan is monotone and fails ramanujan beyond n = 7") {
  GeneratorFamily qr;
  auto rows = abelian_barrier_scan(8, {7, 11, 17, 31, 41}, qr);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].beta > rows[i - 1].beta);
  for (const auto& r : rows)
    if (r.n >= 11) CHECK_FALSE(r.ramanujan);
}

TEST_CASE("translation scatter walks are variance-free") {
  GeneratorFamily qr;
  auto cg = make_cayley(7, qr);
  PathOracle oracle(cg.graph);
  const int c = cg.vertex(2, 3);
  auto walks = translation_scatter_walks(cg, oracle, c);
  const std::size_t len = walks.front().size();
  for (int v = 0; v < 49; ++v) {
    CHECK(walks[v].size() == len);  // all scatter paths share a length
    CHECK(walks[v].front() == v);
    CHECK(walks[v].back() == cg.translate(v, c));
  }
  CHECK(static_cast<int>(len) - 1 == oracle.dist(0, c));
}

TEST_CASE("identity permutation: best translation is the zero shift") {
  GeneratorFamily qr;
  auto cg = make_cayley(5, qr);
  std::vector<int> id(25);
  for (int i = 0; i < 25; ++i) id[i] = i;
  auto res = affine_sigma_search(cg, id, AffineMode::kTranslation, 0, 1);
  CHECK(res.best_shift == 0);
  CHECK(res.best_cd == 0);
}

TEST_CASE("translation exhaustive beats sampled affine at n = 7") {
  GeneratorFamily qr;
  auto cg = make_cayley(7, qr);
  Rng rng(55);
  for (int t = 0; t < 3; ++t) {
    auto pi = rng.permutation(49);
    auto tr = affine_sigma_search(cg, pi, AffineMode::kTranslation, 0, 9);
    auto af = affine_sigma_search(cg, pi, AffineMode::kAffineSampled, 60, 9 + t);
    CHECK(tr.best_congestion <= af.best_congestion);
  }
}

TEST_CASE("random-sigma median C+D on the degree-8 QR host is 7") {
  GeneratorFamily qr;
  auto cg = make_cayley(7, qr);
  PathOracle o(cg.graph);
  EdgeIndex e(cg.graph);
  std::vector<double> cds;
  for (int t = 0; t < 50; ++t) {
    Rng rng = Rng::substream(5, {static_cast<std::uint64_t>(t)});
    auto pi = rng.permutation(49);
    auto sg = rng.permutation(49);
    cds.push_back(two_phase_paths(o, e, sg, pi).lmr_depth());
  }
  std::sort(cds.begin(), cds.end());
  const double med = (cds[24] + cds[25]) / 2;
  CHECK(med >= 6.0);
  CHECK(med <= 8.0);
}

TEST_CASE("random family needs nonzero generators and rejects odd degree") {
  GeneratorFamily bad{"random", 7, 0};
  CHECK_THROWS_AS(bad.generators(5), ParameterError);
  GeneratorFamily rnd{"random", 8, 3};
  auto gens = rnd.generators(11);
  CHECK(gens.size() == 4);
  for (const auto& [a, b] : gens) CHECK((a != 0 || b != 0));
}
