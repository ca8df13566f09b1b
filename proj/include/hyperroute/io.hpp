#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperroute/graphs.hpp"

namespace hyperroute {

/// Line-oriented text formats:
///   hypergraph:  "H N d r"  then one hyperedge per line (base point first,
///                remaining vertices ascending)
///   graph:       "G N"      then "u v w" triples
void write_hypergraph(std::ostream& os, const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& is);

void write_graph(std::ostream& os, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& is);

/// Loads either format, promoting a hypergraph to its clique expansion.
WeightedGraph load_graph_any(const std::string& path);
Hypergraph load_hypergraph(const std::string& path);

void save_text(const std::string& path, const std::string& content);

/// Tabular experiment artifact with machine-readable provenance.
struct Table {
  std::string id;
  std::vector<std::string> provenance;  // "key=value" entries
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
  std::string to_csv() const;
  std::string to_json() const;
  std::string to_markdown() const;
  std::string render(const std::string& format) const;  // csv | json | markdown
};

std::string format_double(double v, int precision = 4);

}  // namespace hyperroute
