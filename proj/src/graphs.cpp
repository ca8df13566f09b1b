#include "hyperroute/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hyperroute/error.hpp"

namespace hyperroute {

std::vector<int> Hypergraph::vertex_degrees() const {
  std::vector<int> deg(num_vertices, 0);
  for (const auto& e : hyperedges)
    for (int v : e) deg[v]++;
  return deg;
}

void Hypergraph::validate() const {
  if (num_vertices <= 0) throw ParameterError("hypergraph: num_vertices must be positive");
  if (r < 2) throw ParameterError("hypergraph: uniformity r must be >= 2");
  if (num_vertices < r) throw ParameterError("hypergraph: need N >= r");
  if (!base_points.empty() && base_points.size() != hyperedges.size())
    throw ParameterError("hypergraph: base_points size mismatch");
  for (std::size_t i = 0; i < hyperedges.size(); ++i) {
    const auto& e = hyperedges[i];
    if (static_cast<int>(e.size()) != r)
      throw ParameterError("hypergraph: hyperedge of wrong size");
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= num_vertices)
        throw ParameterError("hypergraph: vertex index out of range");
      if (j > 0 && e[j] <= e[j - 1])
        throw ParameterError("hypergraph: hyperedge not sorted/distinct");
    }
    if (!base_points.empty() &&
        !std::binary_search(e.begin(), e.end(), base_points[i]))
      throw ParameterError("hypergraph: base point not in its hyperedge");
  }
  if (regular) {
    if (d < 1) throw ParameterError("hypergraph: regular flag needs d >= 1");
    for (int deg : vertex_degrees())
      if (deg != d) throw ParameterError("hypergraph: not d-regular as flagged");
  }
}

void WeightedGraph::add_edge_weight(int u, int v, int w) {
  if (u == v) throw ParameterError("weighted graph: no self loops");
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw ParameterError("weighted graph: vertex out of range");
  if (w < 0) throw ParameterError("weighted graph: negative weight");
  if (w == 0) return;
  auto bump = [&](int a, int b) {
    auto& lst = nbrs_[a];
    auto it = std::lower_bound(lst.begin(), lst.end(), std::make_pair(b, 0));
    if (it != lst.end() && it->first == b)
      it->second += w;
    else
      lst.insert(it, {b, w});
  };
  bump(u, v);
  bump(v, u);
}

int WeightedGraph::weight(int u, int v) const {
  const auto& lst = nbrs_[u];
  auto it = std::lower_bound(lst.begin(), lst.end(), std::make_pair(v, 0));
  return (it != lst.end() && it->first == v) ? it->second : 0;
}

std::vector<std::vector<int>> WeightedGraph::support_adjacency() const {
  std::vector<std::vector<int>> adj(nbrs_.size());
  for (std::size_t u = 0; u < nbrs_.size(); ++u) {
    adj[u].reserve(nbrs_[u].size());
    for (const auto& [v, w] : nbrs_[u]) adj[u].push_back(v);
  }
  return adj;
}

long long WeightedGraph::weighted_degree(int u) const {
  long long s = 0;
  for (const auto& [v, w] : nbrs_[u]) s += w;
  return s;
}

bool WeightedGraph::regular(long long* deg) const {
  if (nbrs_.empty()) return false;
  const long long d0 = weighted_degree(0);
  for (int u = 1; u < num_vertices(); ++u)
    if (weighted_degree(u) != d0) return false;
  if (deg) *deg = d0;
  return true;
}

int WeightedGraph::num_support_edges() const {
  std::size_t s = 0;
  for (const auto& lst : nbrs_) s += lst.size();
  return static_cast<int>(s / 2);
}

std::vector<std::array<int, 3>> WeightedGraph::edges() const {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < num_vertices(); ++u)
    for (const auto& [v, w] : nbrs_[u])
      if (u < v) out.push_back({u, v, w});
  return out;
}

WeightedGraph WeightedGraph::simple_support() const {
  WeightedGraph g(num_vertices());
  for (const auto& [u, v, w] : edges()) g.add_edge_weight(u, v, 1);
  return g;
}

std::vector<double> WeightedGraph::dense_adjacency() const {
  const int n = num_vertices();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (const auto& [v, w] : nbrs_[u]) a[static_cast<std::size_t>(u) * n + v] = w;
  return a;
}

const char* to_string(LiftConvention c) {
  switch (c) {
    case LiftConvention::kBaseShift: return "base_shift";
    case LiftConvention::kLastShift: return "last_shift";
    case LiftConvention::kRotation: return "rotation";
  }
  return "?";
}

LiftConvention lift_convention_from_string(const std::string& s) {
  if (s == "base_shift") return LiftConvention::kBaseShift;
  if (s == "last_shift") return LiftConvention::kLastShift;
  if (s == "rotation") return LiftConvention::kRotation;
  throw ParameterError("unknown lift convention: " + s);
}

void VoltageAssignment::validate() const {
  base.validate();
  if (k < 2) throw ParameterError("voltage assignment: k must be >= 2");
  if (voltages.size() != base.hyperedges.size())
    throw ParameterError("voltage assignment: one voltage per hyperedge required");
  for (int s : voltages)
    if (s < 0 || s >= k) throw ParameterError("voltage assignment: voltage out of Z_k");
}

Hypergraph build_projective_plane(int q) {
  if (q != 2 && q != 3)
    throw ParameterError("build_projective_plane: only q in {2, 3} supported");
  // Singer difference sets: {0,1,3} mod 7 and {0,1,3,9} mod 13.
  const std::vector<int> ds = (q == 2) ? std::vector<int>{0, 1, 3}
                                       : std::vector<int>{0, 1, 3, 9};
  const int n = q * q + q + 1;
  Hypergraph h;
  h.num_vertices = n;
  h.d = q + 1;
  h.r = q + 1;
  h.regular = true;
  for (int i = 0; i < n; ++i) {
    std::vector<int> line;
    for (int delta : ds) line.push_back((i + delta) % n);
    std::sort(line.begin(), line.end());
    h.hyperedges.push_back(line);
    h.base_points.push_back(i);
  }
  h.validate();
  return h;
}

Hypergraph build_random_regular_hypergraph(int num_vertices, int d, int r,
                                           std::uint64_t seed, int max_restarts) {
  if (num_vertices < r || r < 2 || d < 1)
    throw ParameterError("random regular hypergraph: need N >= r >= 2 and d >= 1");
  const long long stubs = static_cast<long long>(num_vertices) * d;
  if (stubs % r != 0) {
    std::ostringstream msg;
    msg << "random regular hypergraph: N*d = " << stubs
        << " not divisible by r = " << r;
    throw ParameterError(msg.str());
  }
  Rng rng = Rng::substream(seed, {0x48595047ull /* "HYPG" */});
  std::vector<int> pool(stubs);
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    int idx = 0;
    for (int v = 0; v < num_vertices; ++v)
      for (int j = 0; j < d; ++j) pool[idx++] = v;
    rng.shuffle(pool);
    bool defective = false;
    std::vector<std::vector<int>> edges;
    edges.reserve(stubs / r);
    for (long long at = 0; at < stubs && !defective; at += r) {
      std::vector<int> e(pool.begin() + at, pool.begin() + at + r);
      std::sort(e.begin(), e.end());
      for (int j = 1; j < r; ++j)
        if (e[j] == e[j - 1]) {
          defective = true;
          break;
        }
      if (!defective) edges.push_back(std::move(e));
    }
    if (defective) continue;
    Hypergraph h;
    h.num_vertices = num_vertices;
    h.hyperedges = std::move(edges);
    for (const auto& e : h.hyperedges) h.base_points.push_back(e.front());
    h.d = d;
    h.r = r;
    h.regular = true;
    h.validate();
    return h;
  }
  std::ostringstream msg;
  msg << "random regular hypergraph: retry budget exhausted for N=" << num_vertices
      << " d=" << d << " r=" << r;
  throw ConstructionError(msg.str());
}

Hypergraph build_grid_hypergraph(const GridSpec& spec) {
  if (spec.n < spec.r)
    throw ParameterError("grid hypergraph: need n >= r");
  const int n = spec.n, r = spec.r;
  Hypergraph h;
  h.num_vertices = n * n;
  h.r = r;
  auto cell = [n](int i, int j) {
    return ((i % n + n) % n) * n + ((j % n + n) % n);
  };
  std::set<std::vector<int>> seen;
  auto add_run = [&](int i0, int j0, int di, int dj) {
    std::vector<int> e;
    e.reserve(r);
    for (int t = 0; t < r; ++t) e.push_back(cell(i0 + t * di, j0 + t * dj));
    const int base = e.front();
    std::sort(e.begin(), e.end());
    for (int t = 1; t < r; ++t)
      if (e[t] == e[t - 1]) return;  // degenerate wrap
    if (!seen.insert(e).second) return;
    h.hyperedges.push_back(std::move(e));
    h.base_points.push_back(base);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add_run(i, j, 0, 1);  // row run
      add_run(i, j, 1, 0);  // column run
    }
  if (spec.model == GridModel::k3D) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        add_run(i, j, 1, 1);   // diagonal
        add_run(i, j, 1, -1);  // anti-diagonal
        add_run(i, j, 0, 2);   // row skip
        add_run(i, j, 2, 0);   // column skip
      }
  }
  auto deg = h.vertex_degrees();
  if (std::all_of(deg.begin(), deg.end(), [&](int x) { return x == deg[0]; })) {
    h.regular = true;
    h.d = deg[0];
  }
  h.validate();
  return h;
}

WeightedGraph clique_expansion(const Hypergraph& h) {
  WeightedGraph g(h.num_vertices);
  for (const auto& e : h.hyperedges)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        g.add_edge_weight(e[i], e[j], 1);
  return g;
}

WeightedGraph build_random_regular_graph(int num_vertices, int d,
                                         std::uint64_t seed, int max_restarts) {
  if (d >= num_vertices)
    throw ParameterError("random regular graph: need d < N");
  if ((static_cast<long long>(num_vertices) * d) % 2 != 0)
    throw ParameterError("random regular graph: N*d must be even");
  if (d < 1) throw ParameterError("random regular graph: need d >= 1");
  Rng rng = Rng::substream(seed, {0x52454747ull /* "REGG" */});
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(num_vertices) * d);
    for (int v = 0; v < num_vertices; ++v)
      for (int j = 0; j < d; ++j) stubs.push_back(v);
    std::set<std::pair<int, int>> edges;
    bool dead = false;
    while (!stubs.empty()) {
      rng.shuffle(stubs);
      std::vector<int> carry;
      bool progressed = false;
      std::size_t i = 0;
      while (i + 1 < stubs.size()) {
        const int u = stubs[i], v = stubs[i + 1];
        const auto key = std::minmax(u, v);
        if (u != v && !edges.count({key.first, key.second})) {
          edges.insert({key.first, key.second});
          progressed = true;
          i += 2;
        } else {
          carry.push_back(stubs[i]);
          i += 1;
        }
      }
      for (; i < stubs.size(); ++i) carry.push_back(stubs[i]);
      stubs.swap(carry);
      if (!stubs.empty() && !progressed) {
        dead = true;  // no suitable pair left; restart
        break;
      }
    }
    if (dead) continue;
    WeightedGraph g(num_vertices);
    for (const auto& [u, v] : edges) g.add_edge_weight(u, v, 1);
    return g;
  }
  std::ostringstream msg;
  msg << "random regular graph: retry budget exhausted for N=" << num_vertices
      << " d=" << d;
  throw ConstructionError(msg.str());
}

WeightedGraph union_layers(const std::vector<WeightedGraph>& layers) {
  if (layers.empty()) throw ParameterError("union_layers: need at least one layer");
  const int n = layers.front().num_vertices();
  for (const auto& g : layers)
    if (g.num_vertices() != n)
      throw ParameterError("union_layers: mismatched vertex counts");
  WeightedGraph out(n);
  for (const auto& g : layers)
    for (const auto& [u, v, w] : g.edges()) out.add_edge_weight(u, v, w);
  return out;
}

Hypergraph voltage_covering(const VoltageAssignment& va) {
  va.validate();
  const auto& base = va.base;
  const int n0 = base.num_vertices;
  const int k = va.k;
  Hypergraph h;
  h.num_vertices = n0 * k;
  h.r = base.r;
  h.d = base.d;
  h.regular = base.regular;
  for (std::size_t ei = 0; ei < base.hyperedges.size(); ++ei) {
    const auto& e = base.hyperedges[ei];
    const int s = va.voltages[ei];
    const int bp = base.base_points.empty() ? e.front() : base.base_points[ei];
    // Sheet offsets per vertex under the selected convention.
    for (int j = 0; j < k; ++j) {
      std::vector<int> lifted;
      int lifted_base = -1;
      for (std::size_t t = 0; t < e.size(); ++t) {
        int sheet;
        switch (va.convention) {
          case LiftConvention::kBaseShift:
            sheet = (e[t] == bp) ? (j + s) % k : j;
            break;
          case LiftConvention::kLastShift:
            sheet = (t + 1 == e.size()) ? (j + s) % k : j;
            break;
          case LiftConvention::kRotation:
            sheet = (j + static_cast<int>(t) * s) % k;
            break;
          default:
            sheet = j;
        }
        const int idx = sheet * n0 + e[t];
        if (e[t] == bp) lifted_base = idx;
        lifted.push_back(idx);
      }
      std::sort(lifted.begin(), lifted.end());
      h.hyperedges.push_back(std::move(lifted));
      h.base_points.push_back(lifted_base);
    }
  }
  h.validate();
  return h;
}

WeightedGraph build_cayley_graph(int n, const std::vector<std::pair<int, int>>& generators) {
  if (n < 2) throw ParameterError("cayley graph: need n >= 2");
  std::set<std::pair<int, int>> sym;
  for (auto [g1, g2] : generators) {
    g1 = ((g1 % n) + n) % n;
    g2 = ((g2 % n) + n) % n;
    if (g1 == 0 && g2 == 0) throw ParameterError("cayley graph: zero generator");
    sym.insert({g1, g2});
    sym.insert({(n - g1) % n, (n - g2) % n});
  }
  WeightedGraph g(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int u = a * n + b;
      for (const auto& [g1, g2] : sym) {
        const int v = ((a + g1) % n) * n + (b + g2) % n;
        if (u < v) g.add_edge_weight(u, v, 1);
      }
    }
  return g;
}

}  // namespace hyperroute
