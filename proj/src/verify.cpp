#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hyperroute/adaptive.hpp"
#include "hyperroute/algebraic.hpp"
#include "hyperroute/entangle.hpp"
#include "hyperroute/error.hpp"
#include "hyperroute/harness.hpp"
#include "hyperroute/multiscale.hpp"
#include "hyperroute/overlay.hpp"
#include "hyperroute/rng.hpp"
#include "hyperroute/routing.hpp"
#include "hyperroute/spectral.hpp"

namespace hyperroute {

namespace {

struct Ctx {
  std::uint64_t seed;
  bool tamper;
  long long greedy_steps = 0;
};

std::string fmt(double v, int prec = 3) { return format_double(v, prec); }

CheckResult check_bounds(Ctx&) {
  CheckResult c{"01", "closed-form routing bounds", "", true};
  struct Row {
    int d, r;
    double beta;
    int coeff;
  };
  const Row rows[] = {{3, 3, 0.833, 49}, {5, 3, 0.666, 30}, {10, 3, 0.474, 24},
                      {3, 5, 0.721, 32}, {5, 5, 0.550, 25}, {10, 5, 0.375, 22}};
  std::ostringstream os;
  for (const auto& row : rows) {
    const auto lsb = lambda_star_bound(row.d, row.r);
    const auto rb = tight_routing_bound(row.d, row.r, 1024);
    const bool beta_ok = std::fabs(lsb.beta_bound - row.beta) < 0.0005;
    const bool coeff_ok = std::fabs(rb.log2_coefficient - row.coeff) <= 1.0;
    if (!beta_ok || !coeff_ok) c.pass = false;
    os << "(" << row.d << "," << row.r << "): beta " << fmt(lsb.beta_bound)
       << "/" << fmt(row.beta) << " coeff " << fmt(rb.log2_coefficient, 1) << "/"
       << row.coeff << "; ";
  }
  c.detail = os.str();
  return c;
}

CheckResult check_fano(Ctx& ctx) {
  CheckResult c{"02", "Fano exactness", "", true};
  const auto fano = build_projective_plane(2);
  const auto g = clique_expansion(fano);
  // K7: every pair weight exactly 1
  for (int u = 0; u < 7 && c.pass; ++u)
    for (int v = u + 1; v < 7; ++v)
      if (g.weight(u, v) != 1) c.pass = false;
  const auto eigs = adjacency_eigenvalues(g);
  bool spec_ok = std::fabs(eigs[0] - 6.0) < 1e-9;
  for (int i = 1; i < 7; ++i)
    if (std::fabs(eigs[i] + 1.0) > 1e-9) spec_ok = false;
  const auto s = spectrum(g);
  const double expected_beta = ctx.tamper ? 0.0 : 1.0 / 6.0;
  const bool beta_ok = std::fabs(s.beta - expected_beta) < 1e-9;
  const bool ram = check_ramanujan_hypergraph(fano, s);
  c.pass = c.pass && spec_ok && beta_ok && ram;
  c.detail = "spectrum {6,-1x6} " + std::string(spec_ok ? "ok" : "BAD") +
             ", beta " + fmt(s.beta) + " vs " + fmt(expected_beta) +
             ", ramanujan " + (ram ? "true" : "false");
  return c;
}

CheckResult check_multilayer(Ctx& ctx) {
  CheckResult c{"03", "multi-layer spectral gain", "", true};
  const double expected[] = {0.650, 0.476, 0.336, 0.240, 0.168};
  auto rows = multilayer_beta_experiment(256, 8, {1, 2, 4, 8, 16}, 5, ctx.seed);
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool ok =
        std::fabs(rows[i].mean_beta - expected[i]) <= 0.03 && rows[i].all_ramanujan;
    if (!ok) c.pass = false;
    os << "L=" << rows[i].layers << ": " << fmt(rows[i].mean_beta) << "/"
       << fmt(expected[i]) << (rows[i].all_ramanujan ? "" : " !ram") << "; ";
  }
  c.detail = os.str();
  return c;
}

CheckResult check_cayley(Ctx&) {
  CheckResult c{"04", "Cayley character spectra", "", true};
  const std::pair<int, double> anchors[] = {{7, 5.74}, {11, 6.46}, {17, 7.21}, {31, 7.76}};
  GeneratorFamily qr;
  std::ostringstream os;
  for (const auto& [p, expect] : anchors) {
    const auto s = cayley_spectrum_characters(p, qr.generators(p));
    const bool ok = std::fabs(s.lambda_star - expect) <= 0.01;
    if (!ok) c.pass = false;
    os << "p=" << p << ": l*=" << fmt(s.lambda_star) << "/" << fmt(expect) << "; ";
  }
  {
    const auto gens = qr.generators(7);
    auto chars = cayley_character_eigenvalues(7, gens);
    auto dense = adjacency_eigenvalues(build_cayley_graph(7, gens));
    double max_diff = 0.0;
    for (std::size_t i = 0; i < chars.size(); ++i)
      max_diff = std::max(max_diff, std::fabs(chars[i] - dense[i]));
    if (max_diff > 1e-6) c.pass = false;
    os << "char-vs-dense " << format_double(max_diff, 9) << "; ";
  }
  for (int p : {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                73, 79, 83, 89, 97}) {
    const auto s = cayley_spectrum_characters(p, qr.generators(p));
    if (check_ramanujan_graph(8, s)) {
      c.pass = false;
      os << "unexpected ramanujan at p=" << p << "; ";
    }
  }
  c.detail = os.str();
  return c;
}

CheckResult check_barrier(Ctx&) {
  CheckResult c{"05", "abelian barrier trend", "", true};
  const std::vector<int> ns = {7, 11, 17, 31, 41};
  struct Fam {
    GeneratorFamily f;
    std::vector<double> expect;
  };
  std::vector<Fam> fams;
  fams.push_back({GeneratorFamily{"qr", 8, 0}, {0.718, 0.775, 0.901, 0.970, 0.983}});
  fams.push_back({GeneratorFamily{"margulis", 8, 0}, {0.718, 0.881, 0.949, 0.985, 0.991}});
  fams.push_back({GeneratorFamily{"random", 8, kRandomFamilyDefaultSeed},
                  {0.591, 0.782, 0.896, 0.920, 0.942}});
  std::ostringstream os;
  for (const auto& fam : fams) {
    auto rows = abelian_barrier_scan(8, ns, fam.f);
    os << fam.f.name << ":";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const bool ok = std::fabs(rows[i].beta - fam.expect[i]) <= 0.02;
      if (!ok) c.pass = false;
      if (i > 0 && rows[i].beta <= rows[i - 1].beta) {
        c.pass = false;
        os << " !mono";
      }
      os << " " << fmt(rows[i].beta) << "/" << fmt(fam.expect[i]);
    }
    os << "; ";
  }
  c.detail = os.str();
  return c;
}

CheckResult check_affine(Ctx& ctx) {
  CheckResult c{"06", "affine derandomization", "", true};
  std::ostringstream os;
  GeneratorFamily qr;
  for (int n : {7, 11}) {
    auto cg = make_cayley(n, qr);
    // Translation-vs-random comparison over 50 shared permutations (the
    // sampled-affine arm is exercised in the unit tests; here only the
    // criterion's translation gate runs).
    PathOracle oracle(cg.graph);
    EdgeIndex edges(cg.graph);
    const int N = n * n;
    std::vector<double> rnd, tra;
    for (int t = 0; t < 50; ++t) {
      Rng rng = Rng::substream(ctx.seed, {0x616666ull, static_cast<std::uint64_t>(n),
                                          static_cast<std::uint64_t>(t)});
      auto pi = rng.permutation(N);
      auto sigma = rng.permutation(N);
      PathSet ps = two_phase_paths(oracle, edges, sigma, pi);
      rnd.push_back(ps.lmr_depth());
      int best_cong = -1, best_cd = 0;
      for (int cc = 0; cc < N; ++cc) {
        auto [C, D] = translation_route_cd(cg, oracle, edges, cc, pi);
        if (best_cong < 0 || C < best_cong || (C == best_cong && C + D < best_cd)) {
          best_cong = C;
          best_cd = C + D;
        }
      }
      tra.push_back(best_cd);
    }
    auto median = [](std::vector<double> v) {
      std::sort(v.begin(), v.end());
      return v.size() % 2 ? v[v.size() / 2]
                          : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2.0;
    };
    const double mr = median(rnd), mt = median(tra);
    const bool ok = mt <= 0.80 * mr;
    if (!ok) c.pass = false;
    os << "n=" << n << ": trans " << fmt(mt, 1) << " vs random " << fmt(mr, 1)
       << " (" << fmt(100.0 * (1.0 - mt / mr), 0) << "%); ";
  }
  c.detail = os.str();
  return c;
}

CheckResult check_voltage_search(Ctx& ctx) {
  CheckResult c{"07", "Fano voltage search", "", true};
  const auto fano = build_projective_plane(2);
  auto res = search_ramanujan_voltages(fano, 2, SearchMode::kExhaustive, 0, ctx.seed,
                                       LiftConvention::kBaseShift);
  const bool count_ok = res.ramanujan_count == 120 && res.total == 128;
  const bool beta_ok = std::fabs(res.best_beta - 0.500) <= 0.005;
  c.pass = count_ok && beta_ok;
  std::ostringstream os;
  os << "ramanujan " << res.ramanujan_count << "/" << res.total << " ("
     << fmt(100.0 * res.fraction, 1) << "%), best beta " << fmt(res.best_beta);
  c.detail = os.str();
  return c;
}

CheckResult check_tower(Ctx& ctx) {
  CheckResult c{"08", "tower routing", "", true};
  const auto tower = build_fano_example_tower();
  const auto stats = tower_level_stats(tower, 20, ctx.seed);
  const double expect_t[] = {3, 5, 8};
  const double expect_ratio[] = {1.07, 1.31, 1.66};
  std::ostringstream os;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const bool ok = std::fabs(stats[i].median_depth - expect_t[i]) <= 1.0 &&
                    std::fabs(stats[i].depth_ratio - expect_ratio[i]) <= 0.3;
    if (!ok) c.pass = false;
    os << "H" << i << ": T=" << fmt(stats[i].median_depth, 1) << "/" << expect_t[i]
       << " ratio " << fmt(stats[i].depth_ratio, 2) << "/" << expect_ratio[i] << "; ";
  }
  // Cross-fiber fraction at the k=2 covering H0 <- H1: exactly 1 - 1/7.
  TowerSpec t1 = build_tower(build_projective_plane(2), 2, {{1, 0, 1, 1, 0, 1, 1}});
  Rng rng = Rng::substream(ctx.seed, {0x746f77ull});
  auto rr = tower_route(t1, rng.permutation(14), ctx.seed);
  const bool cf_ok = std::fabs(rr.cross_fiber_fraction_expected - 6.0 / 7.0) < 1e-12;
  const bool realized = rr.realized;
  if (!cf_ok || !realized) c.pass = false;
  os << "cross-fiber " << fmt(100 * rr.cross_fiber_fraction_expected, 1)
     << "% (exact 85.7%), realized " << (realized ? "yes" : "NO");
  c.detail = os.str();
  return c;
}

CheckResult check_routing_correctness(Ctx& ctx) {
  CheckResult c{"09", "routing correctness", "", true};
  long long checked = 0, realized = 0;
  std::ostringstream os;
  auto run_batch = [&](const WeightedGraph& g, int trials, std::uint64_t salt) {
    PathOracle oracle(g);
    const int n = g.num_vertices();
    // identity always routes in zero steps
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    auto rid = route(g, id, SigmaStrategy{}, salt, &oracle);
    if (rid.depth != 0 || !rid.realized) c.pass = false;
    for (int t = 0; t < trials; ++t) {
      Rng rng = Rng::substream(ctx.seed, {salt, static_cast<std::uint64_t>(t)});
      auto pi = rng.permutation(n);
      auto rr = route(g, pi, SigmaStrategy{}, rng.next(), &oracle);
      ++checked;
      if (rr.realized) ++realized;
      // apply_schedule already rejects non-matching steps; re-assert here.
      auto pos = apply_schedule(n, rr.schedule);
      if (pos != pi) c.pass = false;
    }
  };
  // Pool of hosts: complete, lifts, random regular graphs, grid expansions.
  run_batch(clique_expansion(build_projective_plane(2)), 650, 1);
  {
    auto tower = build_fano_example_tower();
    run_batch(tower.levels[1].expansion, 650, 2);
    run_batch(tower.levels[2].expansion, 650, 3);
  }
  run_batch(clique_expansion(build_grid_hypergraph({8, 3, GridModel::k2D})), 650, 4);
  int salt = 16;
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 8 + 4 * rep;
    const int d = 3 + rep % 5;
    if ((n * d) % 2) continue;
    run_batch(build_random_regular_graph(n, d, ctx.seed + rep), 650, ++salt);
  }
  if (checked < 10000) c.pass = false;
  if (realized != checked) c.pass = false;
  os << realized << "/" << checked << " realized; ";
  // K7: every permutation routes in <= 4 scheduled steps.
  {
    const auto k7 = clique_expansion(build_projective_plane(2));
    PathOracle oracle(k7);
    std::vector<int> pi(7);
    std::iota(pi.begin(), pi.end(), 0);
    int worst = 0;
    bool all_ok = true;
    do {
      auto rr = route(k7, pi, SigmaStrategy{}, 7, &oracle);
      worst = std::max(worst, rr.depth);
      if (!rr.realized || rr.depth > 4) all_ok = false;
    } while (std::next_permutation(pi.begin(), pi.end()));
    if (!all_ok) c.pass = false;
    os << "K7 all 5040 permutations depth <= 4 (worst " << worst << "); ";
  }
  // Brute-force optimum for a 3-cycle on K7 is exactly 2 matchings.
  {
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> cur;
    std::function<void(int, int)> gen = [&](int from, int used_mask) {
      for (int u = from; u < 7; ++u) {
        if (used_mask & (1 << u)) continue;
        for (int v = u + 1; v < 7; ++v) {
          if (used_mask & (1 << v)) continue;
          cur.push_back({u, v});
          matchings.push_back(cur);
          gen(u + 1, used_mask | (1 << u) | (1 << v));
          cur.pop_back();
        }
      }
    };
    gen(0, 0);
    auto encode = [](const std::vector<int>& p) {
      long long code = 0;
      for (int v : p) code = code * 7 + v;
      return code;
    };
    std::map<long long, int> dist;
    std::vector<int> start(7);
    std::iota(start.begin(), start.end(), 0);
    std::vector<std::vector<int>> frontier{start};
    dist[encode(start)] = 0;
    std::vector<int> target = {1, 2, 0, 3, 4, 5, 6};  // 3-cycle (0 1 2)
    int found = -1;
    for (int depth = 1; depth <= 3 && found < 0; ++depth) {
      std::vector<std::vector<int>> next;
      for (const auto& s : frontier) {
        for (const auto& m : matchings) {
          auto t = s;
          for (const auto& [u, v] : m) std::swap(t[u], t[v]);
          const auto code = encode(t);
          if (!dist.count(code)) {
            dist[code] = depth;
            if (t == target) found = depth;
            next.push_back(std::move(t));
          }
        }
      }
      frontier = std::move(next);
    }
    if (found != 2) c.pass = false;
    os << "3-cycle brute-force optimum " << found << " (expect 2)";
  }
  c.detail = os.str();
  return c;
}

CheckResult check_greedy(Ctx& ctx) {
  CheckResult c{"10", "greedy stall statistics", "", true};
  struct Row {
    int n;
    double t, frac;
  };
  const Row rows[] = {{4, 3.0, 0.178}, {6, 4.2, 0.174}, {8, 5.3, 0.166},
                      {10, 5.8, 0.177}, {12, 6.5, 0.175}, {16, 7.5, 0.171}};
  std::ostringstream os;
  long long violations = 0;
  for (const auto& row : rows) {
    double t_sum = 0, f_sum = 0;
    for (int s = 0; s < 20; ++s) {
      auto rep = run_greedy_until_stall(row.n, 8,
                                        Rng::mix(ctx.seed ^ Rng::mix(row.n * 100 + s)));
      t_sum += rep.steps_to_stall;
      f_sum += rep.stall_fraction;
      ctx.greedy_steps += rep.steps_to_stall;
      violations += rep.monotonicity_violations;
    }
    const double t_mean = t_sum / 20, f_mean = f_sum / 20;
    bool frac_ok = std::fabs(f_mean - row.frac) <= 0.03;
    if (row.n == 4) {
      // The published table (0.178) and the published prose (0.114 at
      // N = 16) disagree; accept either reading.
      frac_ok = frac_ok || std::fabs(f_mean - 0.114) <= 0.03;
    }
    const bool ok = std::fabs(t_mean - row.t) <= 1.0 && frac_ok;
    if (!ok) c.pass = false;
    os << "N=" << row.n * row.n << ": T " << fmt(t_mean, 2) << "/" << row.t
       << " frac " << fmt(f_mean) << "/" << fmt(row.frac) << "; ";
  }
  if (violations != 0) c.pass = false;
  os << "monotonicity violations " << violations << "; ";
  for (int n : {8, 10, 12, 14}) {
    auto rep = concentration_check(n, 8, 20, ctx.seed + n);
    if (rep.alpha_hat > 0.55 || rep.monotonicity_violations != 0) c.pass = false;
    ctx.greedy_steps += rep.samples;
    os << "alpha(" << n * n << ")=" << fmt(rep.alpha_hat, 2) << "; ";
  }
  if (ctx.greedy_steps < 785) c.pass = false;
  os << "total monotone steps " << ctx.greedy_steps << "; ";

  c.detail = os.str();
  return c;
}

CheckResult check_hybrid(Ctx& ctx) {
  CheckResult c{"11", "hybrid greedy-Valiant speedup", "", true};
  auto rep = hybrid_greedy_valiant(16, 8, ctx.seed);
  c.pass = rep.t_hybrid <= 0.5 * rep.t_pure;
  std::ostringstream os;
  os << "T_hybrid " << fmt(rep.t_hybrid, 1) << " vs T_pure " << fmt(rep.t_pure, 1)
     << " (speedup " << fmt(rep.speedup, 2) << "x, stall " << fmt(rep.t_stall, 1)
     << " + residual " << fmt(rep.t_residual_model, 1) << ")";
  c.detail = os.str();
  return c;
}

CheckResult check_mw(Ctx& ctx) {
  CheckResult c{"12", "multiplicative-weights selection", "", true};
  double cr_sum = 0;
  int cr_count = 0;
  for (int s = 0; s < 20; ++s) {
    auto fam = default_overlay_family(36, Rng::mix(ctx.seed ^ Rng::mix(0x6d77 + s)));
    Rng rng = Rng::substream(ctx.seed, {0x6d7770ull, static_cast<std::uint64_t>(s)});
    auto pi = rng.permutation(36);
    auto rep = mw_overlay_selection(fam, pi, 0.5, ctx.seed + s, 6);
    if (rep.completed && rep.t_best > 0) {
      cr_sum += rep.competitive_ratio;
      ++cr_count;
    }
  }
  const double mean_cr = cr_count ? cr_sum / cr_count : 0.0;
  c.pass = cr_count >= 15 && mean_cr >= 1.2 && mean_cr <= 2.5;
  std::ostringstream os;
  os << "mean CR " << fmt(mean_cr, 2) << " over " << cr_count << " completed runs";
  c.detail = os.str();
  return c;
}

CheckResult check_hierarchy(Ctx& ctx) {
  CheckResult c{"13", "hierarchical routing", "", true};
  HierarchySpec h16{16, 4};
  auto r16 = hierarchical_route(h16, ctx.seed);
  const bool ratio_ok = r16.ratio >= 0.55 && r16.ratio <= 0.80;
  HierarchySpec h64{64, 8};
  auto r64 = hierarchical_route(h64, ctx.seed);
  const bool gap_ok = r64.tower_gap <= 0.05;
  c.pass = ratio_ok && gap_ok;
  std::ostringstream os;
  os << "n=16 ratio " << fmt(r16.ratio, 3) << " (band [0.55, 0.80]); n=64 T_hier "
     << fmt(r64.t_hier, 1) << " vs T_tower " << fmt(r64.t_tower, 1) << " gap "
     << fmt(100 * r64.tower_gap, 1) << "%";
  c.detail = os.str();
  return c;
}

CheckResult check_entangle(Ctx& ctx) {
  CheckResult c{"14", "entanglement cost model", "", true};
  const int ns[] = {16, 32, 64, 100, 200};
  const long long expect_dist[] = {86, 171, 342, 534, 1067};
  std::ostringstream os;
  for (int i = 0; i < 5; ++i) {
    EntanglementConfig cfg;
    cfg.n = ns[i];
    cfg.d_ent = 16;
    const long long td = distribution_cost(cfg);
    if (std::llabs(td - expect_dist[i]) > 1) c.pass = false;
    const int N = ns[i] * ns[i];
    auto cr = crossover_rounds(N, 16, predicted_route_depth(N),
                               physical_depth_baseline(ns[i]));
    if (cr.never_pays || cr.r_break < 3.5 || cr.r_break > 5.0) c.pass = false;
    os << "N=" << N << ": T_dist " << td << "/" << expect_dist[i] << " R "
       << fmt(cr.r_break, 2) << "; ";
  }
  auto hyb = hybrid_teleport(32, 4, ctx.seed);
  const bool hyb_ok = hyb.fraction_teleported >= 0.90 && hyb.t_total <= 10.0;
  if (!hyb_ok) c.pass = false;
  os << "hybrid frac " << fmt(hyb.fraction_teleported, 2) << " T "
     << fmt(hyb.t_total, 1);
  c.detail = os.str();
  return c;
}

CheckResult check_grid(Ctx&) {
  CheckResult c{"15", "grid spectral table", "", true};
  const int ns[] = {8, 10, 12, 16};
  const double beta2d[] = {0.677, 0.780, 0.842, 0.908};
  const double beta3d[] = {0.556, 0.600, 0.660, 0.789};
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    auto h2 = build_grid_hypergraph({ns[i], 3, GridModel::k2D});
    auto s2 = spectrum(clique_expansion(h2).simple_support());
    auto h3 = build_grid_hypergraph({ns[i], 3, GridModel::k3D});
    auto s3 = spectrum(clique_expansion(h3).simple_support());
    const bool ok2 = std::fabs(s2.beta - beta2d[i]) <= 0.02;
    const bool ok3 = std::fabs(s3.beta - beta3d[i]) <= 0.05;
    const double dratio = s3.degree / s2.degree;
    const bool okd = dratio >= 2.0 && dratio <= 3.0;
    if (!ok2 || !ok3 || !okd) c.pass = false;
    os << ns[i] << "x" << ns[i] << ": 2D " << fmt(s2.beta) << "/" << fmt(beta2d[i])
       << " 3D " << fmt(s3.beta) << "/" << fmt(beta3d[i]) << " d'x" << fmt(dratio, 2)
       << "; ";
  }
  c.detail = os.str();
  return c;
}

}  // namespace

VerifyReport verify_all(std::uint64_t seed, bool tamper,
                        const std::vector<std::string>& only) {
  Ctx ctx{seed, tamper, 0};
  using CheckFn = CheckResult (*)(Ctx&);
  const std::pair<const char*, CheckFn> all[] = {
      {"01", check_bounds},   {"02", check_fano},    {"03", check_multilayer},
      {"04", check_cayley},   {"05", check_barrier}, {"06", check_affine},
      {"07", check_voltage_search}, {"08", check_tower},
      {"09", check_routing_correctness}, {"10", check_greedy},
      {"11", check_hybrid},   {"12", check_mw},      {"13", check_hierarchy},
      {"14", check_entangle}, {"15", check_grid}};
  VerifyReport rep;
  for (const auto& [id, fn] : all) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), id) == only.end())
      continue;
    rep.checks.push_back(fn(ctx));
  }
  rep.greedy_steps_checked = ctx.greedy_steps;
  return rep;
}

std::string render_verify_report(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks)
    os << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
       << c.detail << '\n';
  os << "greedy monotonicity steps checked: " << report.greedy_steps_checked << '\n';
  os << (report.all_pass() ? "ALL CRITERIA PASS" : "CRITERIA FAILURES PRESENT") << '\n';
  return os.str();
}

}  // namespace hyperroute
