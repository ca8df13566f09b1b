#include <fstream>

#include "doctest.h"
#include "hyperroute/error.hpp"
#include "hyperroute/harness.hpp"

using namespace hyperroute;

TEST_CASE("experiments are deterministic given (id, overrides, seed)") {
  ExperimentConfig cfg;
  cfg.id = "bounds";
  auto a = run_experiment(cfg);
  auto b = run_experiment(cfg);
  CHECK(a.to_csv() == b.to_csv());
  cfg.id = "greedy-stall";
  cfg.trials = 3;
  auto c = run_experiment(cfg);
  auto d = run_experiment(cfg);
  CHECK(c.to_csv() == d.to_csv());
  CHECK_THROWS_AS(run_experiment(ExperimentConfig{"nope"}), ParameterError);
}

TEST_CASE("table renders carry provenance in all formats") {
  ExperimentConfig cfg;
  cfg.id = "bounds";
  cfg.seed = 77;
  auto t = run_experiment(cfg);
  CHECK(t.to_csv().find("# seed=77") != std::string::npos);
  CHECK(t.to_json().find("\"seed\": \"77\"") != std::string::npos);
  CHECK(t.to_markdown().find("| d |") != std::string::npos);
  CHECK(t.rows.size() == 6);
}

TEST_CASE("recommend walks the decision table top-down") {
  auto single = recommend(512, 2, 1024, true);
  CHECK(single.strategy == "Single Ramanujan overlay, Valiant routing");
  CHECK_FALSE(single.entanglement_advice);
  auto multi = recommend(256, 10, 1024, true);
  CHECK(multi.strategy == "Multi-layer AOL, L = O(log N) layers");
  CHECK(multi.predicted_depth == doctest::Approx(20.0));
  CHECK(multi.entanglement_advice);
  auto hier = recommend(40, 0, 1024, true);
  CHECK(hier.strategy == "Hierarchical routing, b = sqrt(n)");
  auto grid = recommend(1, 0, 1024, false);
  CHECK(grid.strategy == "Grid routing (no overlay)");
  CHECK(grid.hybrid_advice);
  auto boundary = recommend(10, 4, 1024, true);
  CHECK(boundary.entanglement_advice);  // R = 4 is already advice-worthy
}

TEST_CASE("recommend validates its inputs") {
  CHECK_THROWS_AS(recommend(0, 0, 100, true), ParameterError);
  CHECK_THROWS_AS(recommend(4, -1, 100, true), ParameterError);
}

TEST_CASE("graph files round-trip through the loader") {
  ExperimentConfig cfg;
  cfg.id = "bounds";
  cfg.out_path = "/tmp/hyperroute_bounds_test.csv";
  run_experiment(cfg);
  std::ifstream f(cfg.out_path);
  CHECK(f.good());
}

TEST_CASE("verify negative control: a tampered expectation fails") {
  auto good = verify_all(1, false, {"02"});
  REQUIRE(good.checks.size() == 1);
  CHECK(good.all_pass());
  auto rep = verify_all(1, true, {"02"});
  REQUIRE(rep.checks.size() == 1);
  CHECK_FALSE(rep.checks[0].pass);
  CHECK_FALSE(rep.all_pass());
  CHECK(render_verify_report(rep).find("FAIL [02]") != std::string::npos);
}
