#include "hyperroute/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyperroute/error.hpp"

namespace hyperroute {

void write_hypergraph(std::ostream& os, const Hypergraph& h) {
  os << "H " << h.num_vertices << ' ' << h.d << ' ' << h.r << '\n';
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    const auto& e = h.hyperedges[i];
    const int bp = h.base_points.empty() ? e.front() : h.base_points[i];
    os << bp;
    for (int v : e)
      if (v != bp) os << ' ' << v;
    os << '\n';
  }
}

Hypergraph read_hypergraph(std::istream& is) {
  std::string tag;
  Hypergraph h;
  if (!(is >> tag) || tag != "H")
    throw ParameterError("hypergraph file: expected 'H' header");
  if (!(is >> h.num_vertices >> h.d >> h.r))
    throw ParameterError("hypergraph file: bad header");
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<int> e;
    int v;
    while (ls >> v) e.push_back(v);
    if (e.empty()) continue;
    h.base_points.push_back(e.front());
    std::sort(e.begin(), e.end());
    h.hyperedges.push_back(std::move(e));
  }
  auto deg = h.vertex_degrees();
  h.regular = !deg.empty() &&
              std::all_of(deg.begin(), deg.end(), [&](int x) { return x == h.d; });
  h.validate();
  return h;
}

void write_graph(std::ostream& os, const WeightedGraph& g) {
  os << "G " << g.num_vertices() << '\n';
  for (const auto& [u, v, w] : g.edges()) os << u << ' ' << v << ' ' << w << '\n';
}

WeightedGraph read_graph(std::istream& is) {
  std::string tag;
  int n;
  if (!(is >> tag) || tag != "G" || !(is >> n))
    throw ParameterError("graph file: expected 'G N' header");
  WeightedGraph g(n);
  int u, v, w;
  while (is >> u >> v >> w) g.add_edge_weight(u, v, w);
  return g;
}

WeightedGraph load_graph_any(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParameterError("cannot open " + path);
  char first = 0;
  f >> first;
  f.seekg(0);
  if (first == 'H') return clique_expansion(read_hypergraph(f));
  return read_graph(f);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParameterError("cannot open " + path);
  return read_hypergraph(f);
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ParameterError("cannot write " + path);
  f << content;
}

namespace {
std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

std::string Table::to_csv() const {
  std::ostringstream os;
  for (const auto& p : provenance) os << "# " << p << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << columns[i] << (i + 1 < columns.size() ? "," : "");
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "");
    os << '\n';
  }
  return os.str();
}

std::string Table::to_json() const {
  std::ostringstream os;
  os << "{\n  \"id\": \"" << json_escape(id) << "\",\n  \"provenance\": {";
  for (std::size_t i = 0; i < provenance.size(); ++i) {
    const auto& p = provenance[i];
    const auto eq = p.find('=');
    os << (i ? ", " : "") << '"' << json_escape(p.substr(0, eq)) << "\": \""
       << json_escape(eq == std::string::npos ? "" : p.substr(eq + 1)) << '"';
  }
  os << "},\n  \"columns\": [";
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << (i ? ", " : "") << '"' << json_escape(columns[i]) << '"';
  os << "],\n  \"rows\": [\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << "    [";
    for (std::size_t i = 0; i < rows[r].size(); ++i)
      os << (i ? ", " : "") << '"' << json_escape(rows[r][i]) << '"';
    os << ']' << (r + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string Table::to_markdown() const {
  std::ostringstream os;
  for (const auto& p : provenance) os << "<!-- " << p << " -->\n";
  os << '|';
  for (const auto& c : columns) os << ' ' << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < columns.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : rows) {
    os << '|';
    for (const auto& cell : row) os << ' ' << cell << " |";
    os << '\n';
  }
  return os.str();
}

std::string Table::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json();
  if (format == "markdown") return to_markdown();
  throw ParameterError("unknown table format: " + format);
}

std::string format_double(double v, int precision) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  os << v;
  std::string s = os.str();
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace hyperroute
