// Acceptance suite: one line per published criterion, nonzero exit on any
// failure. Run via ctest (label: acceptance) or `hyperroute verify`.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "hyperroute/harness.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = std::strtoull(argv[++i], nullptr, 10);
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      only.push_back(argv[++i]);
  }
  const auto report = hyperroute::verify_all(seed, false, only);
  std::fputs(hyperroute::render_verify_report(report).c_str(), stdout);
  return report.all_pass() ? 0 : 1;
}
