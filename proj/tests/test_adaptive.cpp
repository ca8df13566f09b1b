#include <numeric>

#include "doctest.h"
#include "hyperroute/adaptive.hpp"
#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"

using namespace hyperroute;

TEST_CASE("displacement state: incremental phi equals recomputed phi") {
  auto overlay = build_random_regular_graph(36, 6, 5);
  Rng rng(1);
  auto pi = rng.permutation(36);
  DisplacementState st(overlay, pi, DisplacementMetric::kGridManhattan, 6);
  const auto edges = overlay.edges();
  for (int step = 0; step < 6; ++step) {
    greedy_matching_step(st, edges);
    CHECK(st.phi() == doctest::Approx(st.phi_recomputed()).epsilon(1e-9));
  }
}

TEST_CASE("greedy step: placed state yields the empty matching") {
  auto overlay = build_random_regular_graph(16, 4, 2);
  std::vector<int> id(16);
  std::iota(id.begin(), id.end(), 0);
  DisplacementState st(overlay, id, DisplacementMetric::kGridManhattan, 4);
  CHECK(st.placed());
  auto step = greedy_matching_step(st, overlay.edges());
  CHECK(step.matching.empty());
  CHECK(step.delta_phi == 0.0);
}

TEST_CASE("greedy step: a forced mutual swap resolves two atoms") {
  WeightedGraph g(4);
  g.add_edge_weight(0, 1, 1);
  g.add_edge_weight(1, 2, 1);
  g.add_edge_weight(2, 3, 1);
  g.add_edge_weight(3, 0, 1);
  std::vector<int> pi = {1, 0, 2, 3};
  DisplacementState st(g, pi, DisplacementMetric::kGridManhattan, 2);
  const double phi0 = st.phi();
  auto step = greedy_matching_step(st, g.edges());
  CHECK(step.delta_phi == doctest::Approx(phi0));
  CHECK(st.placed());
}

TEST_CASE("overlay-bfs metric variant works too") {
  auto overlay = build_random_regular_graph(25, 4, 8);
  Rng rng(2);
  auto pi = rng.permutation(25);
  auto rep_like = DisplacementState(overlay, pi, DisplacementMetric::kOverlayBfs);
  CHECK(rep_like.phi() > 0);
}

TEST_CASE("run_greedy_until_stall: monotone, identity trivial") {
  auto rep = run_greedy_until_stall(6, 8, 4);
  CHECK(rep.monotonicity_violations == 0);
  CHECK(rep.phi0 > 0);
  CHECK(rep.stall_fraction >= 0.0);
  CHECK(rep.stall_fraction < 1.0);
  CHECK(rep.steps_to_stall >= 1);
  for (std::size_t i = 1; i < rep.phi_history.size(); ++i)
    CHECK(rep.phi_history[i] <= rep.phi_history[i - 1]);
}

TEST_CASE("stall regression: productive steps grow with log N") {
  double small = 0, large = 0;
  for (int s = 0; s < 5; ++s) {
    small += run_greedy_until_stall(4, 8, 100 + s).steps_to_stall;
    large += run_greedy_until_stall(12, 8, 100 + s).steps_to_stall;
  }
  CHECK(large > small);
}

TEST_CASE("concentration check: bounded in [0,1], enough trials required") {
  CHECK_THROWS_AS(concentration_check(6, 8, 5, 1), ParameterError);
  auto rep = concentration_check(6, 8, 20, 1);
  CHECK(rep.alpha_hat >= 0.0);
  CHECK(rep.alpha_hat <= 1.0);
  CHECK(rep.samples > 0);
}

TEST_CASE("hybrid greedy-valiant reports coherent numbers") {
  auto rep = hybrid_greedy_valiant(8, 8, 9, 2);
  CHECK(rep.t_stall > 0);
  CHECK(rep.stall_fraction > 0);
  CHECK(rep.stall_fraction < 0.5);
  CHECK(rep.t_hybrid == doctest::Approx(rep.t_stall + rep.t_residual_model));
  CHECK(rep.speedup > 1.0);
}

TEST_CASE("mw selection: single-member family has CR exactly 1") {
  OverlayFamily fam;
  fam.names = {"complete"};
  WeightedGraph k(16);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) k.add_edge_weight(u, v, 1);
  fam.graphs.push_back(k);
  Rng rng(12);
  auto pi = rng.permutation(16);
  auto rep = mw_overlay_selection(fam, pi, 0.5, 3, 4);
  CHECK(rep.completed);
  CHECK(rep.competitive_ratio == doctest::Approx(1.0));
}

TEST_CASE("mw selection on the published family completes and tracks the best") {
  auto fam = default_overlay_family(36, 21);
  Rng rng(13);
  auto pi = rng.permutation(36);
  auto rep = mw_overlay_selection(fam, pi, 0.5, 4, 6);
  CHECK(rep.completed);
  CHECK(rep.t_best > 0);
  CHECK(rep.competitive_ratio > 0);
  CHECK(rep.final_weights.size() == 3);
}
