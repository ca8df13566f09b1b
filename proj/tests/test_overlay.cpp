#include <cmath>

#include "doctest.h"
#include "hyperroute/error.hpp"
#include "hyperroute/overlay.hpp"

using namespace hyperroute;

TEST_CASE("overlay depth formula") {
  CHECK(overlay_depth(10, 100, 50) == 10);   // k >= N/2: unchanged
  CHECK(overlay_depth(10, 100, 10) == 50);   // 10 * ceil(100/20)
  CHECK(overlay_depth(7, 64, 1) == 7 * 32);  // k = O(1): N-scale blowup
  CHECK_THROWS_AS(overlay_depth(-1, 10, 1), ParameterError);
}

TEST_CASE("capacity regimes match the published thresholds") {
  CHECK(capacity_regime(512, 1024) == "Optimal, O(log N)");
  CHECK(capacity_regime(1024.0 / 10.0, 1024) == "Near-optimal, O(log^2 N)");
  CHECK(capacity_regime(32, 1024) == "Matches grid AOD, O(sqrt(N) log N)");
  CHECK(capacity_regime(1, 1024) == "Worse than grid, O(N log N)");
}

TEST_CASE("effective capacity: crosstalk retention and checkerboard branch") {
  CHECK(effective_capacity(4, 32, 0.0).best == doctest::Approx(128.0));
  // gamma = 0.2, large L: retention -> 1/1.4 of ideal
  auto big = effective_capacity(64, 10, 0.2);
  CHECK(big.direct / (64.0 * 10.0) == doctest::Approx(1.0 / 1.4).epsilon(0.01));
  // gamma = 0.6, L = 4, k0 = 32: direct 128/1.9 = 67.4 beats checkerboard 64
  auto cb = effective_capacity(4, 32, 0.6);
  CHECK(cb.direct == doctest::Approx(128.0 / 1.9).epsilon(1e-9));
  CHECK(cb.checkerboard == doctest::Approx(64.0));
  CHECK(cb.best == doctest::Approx(cb.direct));
  // effective capacity never exceeds L*k0, equality iff gamma = 0
  CHECK(effective_capacity(8, 16, 0.3).best < 8 * 16);
}

TEST_CASE("multilayer experiment: sqrt-law ratio near one at moderate size") {
  auto rows = multilayer_beta_experiment(100, 8, {1, 4}, 3, 77);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].sqrt_law_ratio == doctest::Approx(1.0));
  CHECK(rows[1].sqrt_law_ratio > 0.8);
  CHECK(rows[1].sqrt_law_ratio < 1.2);
  CHECK(rows[1].mean_beta < rows[0].mean_beta);
  CHECK(rows[0].all_ramanujan);
  CHECK(rows[1].all_ramanujan);
}

TEST_CASE("routed overlay speedup over the grid is in the published range") {
  auto rows = end_to_end_overlay_speedup(10, {4}, 8, 11, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].speedup == doctest::Approx(1.0));  // the grid itself
  CHECK(rows[1].speedup > 1.8);                    // published 2.7x +-30%
  CHECK(rows[1].speedup < 3.9);
}

TEST_CASE("overlay depth is monotone nonincreasing in capacity") {
  long long prev = -1;
  for (int k = 1; k <= 64; k *= 2) {
    const long long d = overlay_depth(9, 128, k);
    if (prev >= 0) CHECK(d <= prev);
    prev = d;
  }
  CHECK(overlay_depth(9, 128, 64) == 9);
  CHECK(overlay_depth(9, 128, 200) == 9);
}

TEST_CASE("union overlay is the sum of its layers' degrees") {
  auto u = build_union_overlay(64, 4, 3, 5);
  long long deg = 0;
  CHECK(u.regular(&deg));
  CHECK(deg == 12);
}
