#include "hyperroute/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hyperroute/error.hpp"
#include "hyperroute/rng.hpp"

namespace hyperroute {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}
}  // namespace

std::vector<std::pair<int, int>> GeneratorFamily::generators(int n) const {
  const int d = degree / 2;
  if (degree % 2 != 0 || d < 1)
    throw ParameterError("generator family: degree must be a positive even number");
  if (name == "qr") {
    if (!is_prime(n)) throw ParameterError("qr family: n must be prime");
    std::vector<std::pair<int, int>> out;
    for (int g = 1; g <= d; ++g) out.push_back({g % n, (g * g) % n});
    return out;
  }
  if (name == "margulis") {
    if (d != 4)
      throw ParameterError("margulis family: defined for degree 8");
    return {{1, 0}, {0, 1}, {1, 1}, {1, n - 1}};
  }
  if (name == "random") {
    Rng rng = Rng::substream(seed, {0x434752ull /* "CGR" */,
                                    static_cast<std::uint64_t>(n)});
    std::set<std::pair<int, int>> chosen;
    std::vector<std::pair<int, int>> out;
    while (static_cast<int>(out.size()) < d) {
      const int a = rng.below_int(n), b = rng.below_int(n);
      if (a == 0 && b == 0) continue;
      const std::pair<int, int> g{a, b}, gneg{(n - a) % n, (n - b) % n};
      if (chosen.count(g) || chosen.count(gneg)) continue;
      chosen.insert(g);
      out.push_back(g);
    }
    return out;
  }
  throw ParameterError("unknown generator family: " + name);
}

CayleyGraph make_cayley(int n, const GeneratorFamily& family) {
  CayleyGraph cg;
  cg.n = n;
  cg.generators = family.generators(n);
  cg.graph = build_cayley_graph(n, cg.generators);
  return cg;
}

std::vector<double> cayley_character_eigenvalues(
    int n, const std::vector<std::pair<int, int>>& generators) {
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (const auto& [g1, g2] : generators) {
        const int phase = (a * g1 + b * g2) % n;
        s += 2.0 * std::cos(kTwoPi * phase / n);
      }
      vals.push_back(s);
    }
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

SpectralSummary cayley_spectrum_characters(
    int n, const std::vector<std::pair<int, int>>& generators) {
  auto vals = cayley_character_eigenvalues(n, generators);
  return summarize_spectrum(vals, 2.0 * generators.size());
}

std::vector<BarrierRow> abelian_barrier_scan(int degree, const std::vector<int>& n_list,
                                             const GeneratorFamily& family) {
  std::vector<BarrierRow> rows;
  const double ram_bound = 2.0 * std::sqrt(degree - 1.0);
  for (int n : n_list) {
    GeneratorFamily f = family;
    f.degree = degree;
    auto gens = f.generators(n);
    auto s = cayley_spectrum_characters(n, gens);
    BarrierRow row;
    row.n = n;
    row.lambda2 = s.lambda2;
    row.lambda_star = s.lambda_star;
    row.beta = s.lambda2 / degree;  // the barrier statement controls lambda2
    row.ramanujan_ratio = s.lambda_star / ram_bound;
    row.ramanujan = check_ramanujan_graph(degree, s);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<int>> translation_scatter_walks(const CayleyGraph& cg,
                                                        const PathOracle& oracle, int c) {
  const int n = cg.n;
  const int N = n * n;
  // One shortest word for c, read off the canonical path 0 -> c.
  const auto word_path = oracle.path(0, c);
  std::vector<int> steps;  // encoded generator offsets a*n+b
  for (std::size_t i = 0; i + 1 < word_path.size(); ++i) {
    const int u = word_path[i], v = word_path[i + 1];
    const int da = ((v / n - u / n) % n + n) % n;
    const int db = ((v % n - u % n) % n + n) % n;
    steps.push_back(da * n + db);
  }
  std::vector<std::vector<int>> walks(N);
  for (int v = 0; v < N; ++v) {
    auto& w = walks[v];
    w.reserve(steps.size() + 1);
    w.push_back(v);
    for (int s : steps) w.push_back(cg.translate(w.back(), s));
  }
  return walks;
}

std::pair<int, int> translation_route_cd(const CayleyGraph& cg, const PathOracle& oracle,
                                         const EdgeIndex& edges, int c,
                                         const std::vector<int>& pi) {
  const int N = cg.n * cg.n;
  auto scatter = translation_scatter_walks(cg, oracle, c);
  std::vector<int> load(edges.count(), 0);
  int d1 = 0;
  for (const auto& w : scatter) {
    d1 = std::max(d1, static_cast<int>(w.size()) - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      load[edges.index(w[i], w[i + 1])]++;
  }
  const int c1 = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
  std::fill(load.begin(), load.end(), 0);
  int d2 = 0;
  for (int v = 0; v < N; ++v) {
    const int from = cg.translate(v, c);
    auto w = oracle.path(from, pi[v]);
    d2 = std::max(d2, static_cast<int>(w.size()) - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      load[edges.index(w[i], w[i + 1])]++;
  }
  const int c2 = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
  return {std::max(c1, c2), std::max(d1, d2)};
}

namespace {

// C and D for an arbitrary sigma on a Cayley host via canonical BFS paths.
std::pair<int, int> generic_route_cd(const PathOracle& oracle, const EdgeIndex& edges,
                                     const std::vector<int>& sigma,
                                     const std::vector<int>& pi) {
  PathSet ps = two_phase_paths(oracle, edges, sigma, pi);
  return {ps.congestion, ps.dilation};
}

struct Mat2 {
  int a, b, c, d;
};

bool invertible_mod(const Mat2& m, int n) {
  const int det = ((m.a * m.d - m.b * m.c) % n + n) % n;
  return std::gcd(det, n) == 1;
}

}  // namespace

AffineSearchResult affine_sigma_search(const CayleyGraph& cg, const std::vector<int>& pi,
                                       AffineMode mode, int samples, std::uint64_t seed) {
  const int n = cg.n;
  const int N = n * n;
  validate_permutation(pi, N);
  PathOracle oracle(cg.graph);
  EdgeIndex edges(cg.graph);
  AffineSearchResult out;
  int best_c = -1, best_cong = 0, best_cd = 0;
  if (mode == AffineMode::kTranslation) {
    for (int c = 0; c < N; ++c) {
      auto [C, D] = translation_route_cd(cg, oracle, edges, c, pi);
      if (best_c < 0 || C < best_cong || (C == best_cong && C + D < best_cd)) {
        best_c = c;
        best_cong = C;
        best_cd = C + D;
      }
    }
  } else {
    Rng rng = Rng::substream(seed, {0x616666ull /* "aff" */});
    int found = 0;
    while (found < samples) {
      Mat2 m{rng.below_int(n), rng.below_int(n), rng.below_int(n), rng.below_int(n)};
      if (!invertible_mod(m, n)) continue;
      if (m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1) continue;  // pure translations live in the other mode
      const int ca = rng.below_int(n), cb = rng.below_int(n);
      ++found;
      std::vector<int> sigma(N);
      for (int v = 0; v < N; ++v) {
        const int x = v / n, y = v % n;
        sigma[v] = cg.vertex(m.a * x + m.b * y + ca, m.c * x + m.d * y + cb);
      }
      // An invertible matrix maps Z_n^2 bijectively only when n is prime;
      // guard anyway.
      std::vector<char> seen(N, 0);
      bool bijective = true;
      for (int v : sigma) {
        if (seen[v]) { bijective = false; break; }
        seen[v] = 1;
      }
      if (!bijective) continue;
      auto [C, D] = generic_route_cd(oracle, edges, sigma, pi);
      const int enc = (m.a * n + m.b) * N + ca * n + cb;
      if (best_c < 0 || C < best_cong || (C == best_cong && C + D < best_cd)) {
        best_c = enc;
        best_cong = C;
        best_cd = C + D;
      }
    }
  }
  out.best_shift = best_c;
  out.best_congestion = best_cong;
  out.best_cd = best_cd;
  return out;
}

AffineComparison affine_comparison(const CayleyGraph& cg, int trials, int samples,
                                   std::uint64_t seed) {
  const int N = cg.n * cg.n;
  PathOracle oracle(cg.graph);
  EdgeIndex edges(cg.graph);
  std::vector<double> rnd, aff, tra;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, {0x636d70ull, static_cast<std::uint64_t>(t)});
    auto pi = rng.permutation(N);
    auto sigma = rng.permutation(N);
    auto [rc, rd] = generic_route_cd(oracle, edges, sigma, pi);
    rnd.push_back(rc + rd);
    auto tr = affine_sigma_search(cg, pi, AffineMode::kTranslation, 0, seed);
    tra.push_back(tr.best_cd);
    auto af = affine_sigma_search(cg, pi, AffineMode::kAffineSampled, samples,
                                  seed + 1000 + t);
    aff.push_back(af.best_cd);
  }
  auto median = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m == 0 ? 0.0 : (m % 2 ? v[m / 2] : (v[m / 2 - 1] + v[m / 2]) / 2.0);
  };
  AffineComparison cmp;
  cmp.median_random = median(rnd);
  cmp.median_affine = median(aff);
  cmp.median_translation = median(tra);
  return cmp;
}

}  // namespace hyperroute
