#include "hyperroute/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperroute/adaptive.hpp"
#include "hyperroute/algebraic.hpp"
#include "hyperroute/entangle.hpp"
#include "hyperroute/error.hpp"
#include "hyperroute/multiscale.hpp"
#include "hyperroute/overlay.hpp"
#include "hyperroute/rng.hpp"
#include "hyperroute/routing.hpp"
#include "hyperroute/spectral.hpp"

namespace hyperroute {

namespace {

int get_int(const ExperimentConfig& cfg, const std::string& key, int def) {
  auto it = cfg.overrides.find(key);
  return it == cfg.overrides.end() ? def : std::stoi(it->second);
}

std::string fmt(double v, int prec = 3) { return format_double(v, prec); }

Table base_table(const ExperimentConfig& cfg, std::vector<std::string> columns) {
  Table t;
  t.id = cfg.id;
  t.provenance.push_back("id=" + cfg.id);
  t.provenance.push_back("seed=" + std::to_string(cfg.seed));
  for (const auto& [k, v] : cfg.overrides) t.provenance.push_back(k + "=" + v);
  t.columns = std::move(columns);
  return t;
}

Table exp_bounds(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"d", "r", "beta", "d_prime", "rt_coefficient",
                             "diameter_coefficient"});
  const int drs[][2] = {{3, 3}, {5, 3}, {10, 3}, {3, 5}, {5, 5}, {10, 5}};
  for (const auto& dr : drs) {
    const auto lsb = lambda_star_bound(dr[0], dr[1]);
    const auto rb = tight_routing_bound(dr[0], dr[1], 1024);
    const double d_prime = dr[0] * (dr[1] - 1);
    const double diam_coeff = 1.0 / std::log2(d_prime / lsb.lambda_star);
    t.add_row({std::to_string(dr[0]), std::to_string(dr[1]), fmt(lsb.beta_bound),
               fmt(d_prime, 0), fmt(rb.log2_coefficient, 1), fmt(diam_coeff, 1)});
  }
  return t;
}

Table exp_grid_spectral(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"n", "N", "r", "d2", "D2", "beta2", "d3", "D3", "beta3",
                             "improvement"});
  for (int n : {8, 10, 12, 16}) {
    auto g2 = clique_expansion(build_grid_hypergraph({n, 3, GridModel::k2D}))
                  .simple_support();
    auto g3 = clique_expansion(build_grid_hypergraph({n, 3, GridModel::k3D}))
                  .simple_support();
    auto s2 = spectrum(g2);
    auto s3 = spectrum(g3);
    const double improv = (1.0 - s3.beta) / (1.0 - s2.beta);
    t.add_row({std::to_string(n), std::to_string(n * n), "3", fmt(s2.degree, 0),
               std::to_string(exact_diameter(g2)), fmt(s2.beta), fmt(s3.degree, 0),
               std::to_string(exact_diameter(g3)), fmt(s3.beta), fmt(improv, 2)});
  }
  return t;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

Table exp_spectral_gain(const ExperimentConfig& cfg) {
  auto it = cfg.overrides.find("layers");
  const std::vector<int> layers =
      it == cfg.overrides.end() ? std::vector<int>{1, 2, 4, 8, 16}
                                : parse_int_list(it->second);
  std::vector<std::string> cols{"N"};
  for (int L : layers) cols.push_back("L" + std::to_string(L));
  Table t = base_table(cfg, cols);
  const int trials = cfg.trials > 0 ? cfg.trials : 5;
  for (int N : {64, 100, 144, 256}) {
    auto rows = multilayer_beta_experiment(N, get_int(cfg, "d0", 8), layers,
                                           trials, cfg.seed);
    std::vector<std::string> cells{std::to_string(N)};
    for (const auto& r : rows) cells.push_back(fmt(r.mean_beta));
    t.add_row(cells);
  }
  return t;
}

Table exp_overlay_speedup(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"N", "model", "d_eff", "beta", "T_med", "speedup"});
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  for (int n : {10, 12}) {
    auto rows = end_to_end_overlay_speedup(n, {1, 2, 4}, get_int(cfg, "d0", 8),
                                           trials, cfg.seed);
    for (const auto& r : rows)
      t.add_row({std::to_string(n * n), r.model, fmt(r.d_eff, 0), fmt(r.beta),
                 fmt(r.median_depth, 1), fmt(r.speedup, 2)});
  }
  return t;
}

Table exp_qr(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"p", "N", "lambda_star", "ramanujan_bound", "ratio"});
  GeneratorFamily qr;
  const double bound = 2.0 * std::sqrt(7.0);
  for (int p : {7, 11, 17, 31, 53, 97}) {
    auto s = cayley_spectrum_characters(p, qr.generators(p));
    t.add_row({std::to_string(p), std::to_string(p * p), fmt(s.lambda_star, 2),
               fmt(bound, 2), fmt(s.lambda_star / bound, 2)});
  }
  return t;
}

Table exp_cayley_families(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"family", "n7", "n11", "n17", "n31", "n41"});
  const std::vector<int> ns = {7, 11, 17, 31, 41};
  for (const char* name : {"qr", "margulis", "random"}) {
    GeneratorFamily f{name, 8,
                      std::string(name) == "random" ? kRandomFamilyDefaultSeed : 0};
    auto rows = abelian_barrier_scan(8, ns, f);
    std::vector<std::string> cells{name};
    for (const auto& r : rows) cells.push_back(fmt(r.beta));
    t.add_row(cells);
  }
  return t;
}

Table exp_affine(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"n", "median_random", "median_affine",
                             "median_translation", "improvement_pct"});
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  GeneratorFamily qr;
  for (int n : {7, 11}) {
    auto cg = make_cayley(n, qr);
    auto cmp = affine_comparison(cg, trials, 200, cfg.seed);
    t.add_row({std::to_string(n), fmt(cmp.median_random, 1), fmt(cmp.median_affine, 1),
               fmt(cmp.median_translation, 1),
               fmt(100.0 * (1.0 - cmp.median_translation / cmp.median_random), 0)});
  }
  return t;
}

Table exp_fano_coverings(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"k", "N", "mode", "best_beta", "mean_beta",
                             "ramanujan_pct"});
  const auto fano = build_projective_plane(2);
  for (int k : {2, 3, 4, 5, 7}) {
    const bool exhaustive = k == 2;
    auto res = search_ramanujan_voltages(
        fano, k, exhaustive ? SearchMode::kExhaustive : SearchMode::kSample,
        cfg.trials > 0 ? cfg.trials : 200, cfg.seed, LiftConvention::kBaseShift);
    t.add_row({std::to_string(k), std::to_string(7 * k),
               exhaustive ? "exhaustive" : "sampled", fmt(res.best_beta),
               fmt(res.mean_beta), fmt(100.0 * res.fraction, 1)});
  }
  return t;
}

Table exp_tower(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"level", "N", "beta", "T_med", "T_over_log2N"});
  const int k = get_int(cfg, "k", 2);
  const int levels = get_int(cfg, "levels", 3);
  auto tower = (k == 2 && levels == 3)
                   ? build_fano_example_tower()
                   : build_searched_tower(build_projective_plane(2), k, levels,
                                          200, cfg.seed);
  auto stats = tower_level_stats(tower, cfg.trials > 0 ? cfg.trials : 20, cfg.seed);
  for (const auto& s : stats)
    t.add_row({"H" + std::to_string(s.level), std::to_string(s.num_vertices),
               fmt(s.beta), fmt(s.median_depth, 1), fmt(s.depth_ratio, 2)});
  return t;
}

Table exp_teleport(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"N", "d_ent", "beta", "T_route", "T_over_log2N"});
  for (const auto& [N, d] : std::vector<std::pair<int, int>>{
           {100, 8}, {100, 16}, {256, 8}, {256, 16}, {256, 32}}) {
    auto overlay = build_random_regular_graph(N, d, Rng::mix(cfg.seed ^ Rng::mix(d)));
    auto s = spectrum(overlay);
    const double tr = median_route_cd(overlay, cfg.trials > 0 ? cfg.trials : 20,
                                      cfg.seed);
    t.add_row({std::to_string(N), std::to_string(d), fmt(s.beta), fmt(tr, 1),
               fmt(tr / std::log2(static_cast<double>(N)), 2)});
  }
  return t;
}

Table exp_crossover(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"N", "T_route", "T_phys", "T_dist", "R_break"});
  for (int n : {16, 32, 64, 100, 200}) {
    const int N = n * n;
    auto cr = crossover_rounds(N, 16, predicted_route_depth(N),
                               physical_depth_baseline(n));
    t.add_row({std::to_string(N), fmt(cr.t_route, 0), std::to_string(cr.t_phys),
               std::to_string(cr.t_dist), fmt(cr.r_break, 1)});
  }
  return t;
}

Table exp_hybrid_teleport(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"threshold", "fraction_teleported", "T_teleport",
                             "T_cleanup", "T_total", "T_sequential"});
  const int n = get_int(cfg, "n", 32);
  for (int thresh : {4, 8, 12, 16}) {
    auto rep = hybrid_teleport(n, thresh, cfg.seed);
    t.add_row({std::to_string(thresh), fmt(rep.fraction_teleported, 2),
               fmt(rep.t_teleport, 1), fmt(rep.t_cleanup, 1), fmt(rep.t_total, 1),
               fmt(rep.t_sequential, 1)});
  }
  return t;
}

Table exp_greedy(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"n", "N", "step0_delta", "T_stall", "stall_fraction"});
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  for (int n : {4, 6, 8, 10, 12, 16}) {
    double t_sum = 0, f_sum = 0, d0_sum = 0;
    for (int s = 0; s < trials; ++s) {
      auto rep = run_greedy_until_stall(n, get_int(cfg, "d", 8),
                                        Rng::mix(cfg.seed ^ Rng::mix(n * 131 + s)));
      t_sum += rep.steps_to_stall;
      f_sum += rep.stall_fraction;
      d0_sum += rep.step0_delta;
    }
    t.add_row({std::to_string(n), std::to_string(n * n), fmt(d0_sum / trials, 2),
               fmt(t_sum / trials, 1), fmt(f_sum / trials)});
  }
  return t;
}

Table exp_mw(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"trial", "T_mw", "T_best", "CR", "completed"});
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  const int N = get_int(cfg, "N", 36);
  const int side = static_cast<int>(std::llround(std::sqrt(double(N))));
  for (int s = 0; s < trials; ++s) {
    auto fam = default_overlay_family(N, Rng::mix(cfg.seed ^ Rng::mix(0x6d77 + s)));
    Rng rng = Rng::substream(cfg.seed, {0x6d7770ull, static_cast<std::uint64_t>(s)});
    auto rep = mw_overlay_selection(fam, rng.permutation(N), 0.5, cfg.seed + s, side);
    t.add_row({std::to_string(s), fmt(rep.t_mw, 0), fmt(rep.t_best, 0),
               fmt(rep.competitive_ratio, 2), rep.completed ? "yes" : "no"});
  }
  return t;
}

Table exp_hierarchy(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"n", "b", "levels", "T_hier", "T_flat", "ratio"});
  for (const auto& [n, b] : std::vector<std::pair<int, int>>{{8, 2}, {16, 4}, {64, 8}}) {
    HierarchySpec spec;
    spec.n = n;
    spec.b = b;
    auto rep = hierarchical_route(spec, cfg.seed);
    t.add_row({std::to_string(n), std::to_string(b),
               std::to_string(spec.levels()), fmt(rep.t_hier, 1), fmt(rep.t_flat, 1),
               fmt(rep.ratio, 3)});
  }
  return t;
}

Table exp_tower_equiv(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"n", "b", "T_hier", "T_tower", "gap_pct"});
  for (const auto& [n, b] : std::vector<std::pair<int, int>>{{16, 4}, {64, 8}}) {
    HierarchySpec spec;
    spec.n = n;
    spec.b = b;
    auto rep = hierarchical_route(spec, cfg.seed);
    t.add_row({std::to_string(n), std::to_string(b), fmt(rep.t_hier, 1),
               fmt(rep.t_tower, 1), fmt(100 * rep.tower_gap, 1)});
  }
  return t;
}

Table exp_capacity(const ExperimentConfig& cfg) {
  Table t = base_table(cfg, {"capacity", "regime", "depth_at_N1024"});
  const int N = get_int(cfg, "N", 1024);
  const double log2n = std::log2(static_cast<double>(N));
  struct Row {
    std::string label;
    double k;
  };
  const Row rows[] = {{"N/2", N / 2.0},
                      {"N/log2N", N / log2n},
                      {"sqrt(N)", std::sqrt(static_cast<double>(N))},
                      {"1", 1.0}};
  for (const auto& row : rows) {
    const long long depth = overlay_depth(
        static_cast<long long>(std::lround(2 * log2n)), N,
        std::max(1, static_cast<int>(row.k)));
    t.add_row({row.label, capacity_regime(row.k, N), std::to_string(depth)});
  }
  return t;
}

}  // namespace

std::vector<std::string> experiment_ids() {
  return {"bounds",        "grid-spectral",  "spectral-gain", "overlay-speedup",
          "capacity",      "qr-table",       "cayley-families", "affine",
          "fano-coverings", "tower-routing", "teleport",      "crossover",
          "hybrid-teleport", "greedy-stall", "mw-selection",  "hierarchy",
          "tower-equivalence"};
}

Table run_experiment(const ExperimentConfig& config) {
  Table t;
  if (config.id == "bounds") t = exp_bounds(config);
  else if (config.id == "grid-spectral") t = exp_grid_spectral(config);
  else if (config.id == "spectral-gain") t = exp_spectral_gain(config);
  else if (config.id == "overlay-speedup") t = exp_overlay_speedup(config);
  else if (config.id == "capacity") t = exp_capacity(config);
  else if (config.id == "qr-table") t = exp_qr(config);
  else if (config.id == "cayley-families") t = exp_cayley_families(config);
  else if (config.id == "affine") t = exp_affine(config);
  else if (config.id == "fano-coverings") t = exp_fano_coverings(config);
  else if (config.id == "tower-routing") t = exp_tower(config);
  else if (config.id == "teleport") t = exp_teleport(config);
  else if (config.id == "crossover") t = exp_crossover(config);
  else if (config.id == "hybrid-teleport") t = exp_hybrid_teleport(config);
  else if (config.id == "greedy-stall") t = exp_greedy(config);
  else if (config.id == "mw-selection") t = exp_mw(config);
  else if (config.id == "hierarchy") t = exp_hierarchy(config);
  else if (config.id == "tower-equivalence") t = exp_tower_equiv(config);
  else throw ParameterError("unknown experiment id: " + config.id);
  if (!config.out_path.empty()) save_text(config.out_path, t.render(config.format));
  return t;
}

DecisionReport recommend(double k0, int rounds, int num_vertices, bool pi_known) {
  if (k0 < 1 || rounds < 0)
    throw ParameterError("recommend: k0 >= 1 and R >= 0 required");
  const double N = num_vertices;
  const double log2n = std::log2(N);
  DecisionReport rep;
  if (k0 >= N / 2.0) {
    rep.strategy = "Single Ramanujan overlay, Valiant routing";
    rep.depth_formula = "O(log N)";
    rep.predicted_depth = 2.0 * log2n;
  } else if (k0 >= N / log2n) {
    rep.strategy = "Multi-layer AOL, L = O(log N) layers";
    rep.depth_formula = "O(log N)";
    rep.predicted_depth = 2.0 * log2n;
  } else if (k0 >= std::sqrt(N)) {
    rep.strategy = "Hierarchical routing, b = sqrt(n)";
    rep.depth_formula = "O(log^2 N / log b)";
    rep.predicted_depth = 4.0 * log2n;
  } else {
    rep.strategy = "Grid routing (no overlay)";
    rep.depth_formula = "O(sqrt(N))";
    rep.predicted_depth = std::ceil(1.5 * std::sqrt(N));
  }
  if (rounds >= 4) {
    rep.entanglement_advice = true;
    rep.notes.push_back(
        "R >= 4: pre-distribute Bell pairs along a Ramanujan entanglement overlay");
  }
  if (!pi_known) {
    rep.hybrid_advice = true;
    rep.notes.push_back(
        "unknown permutation: greedy displacement matching first, Valiant on the residual");
  }
  return rep;
}

}  // namespace hyperroute
