// Python bindings for the main operations: graph construction, spectra,
// routing, voltage search, and the cost models.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperroute/adaptive.hpp"
#include "hyperroute/algebraic.hpp"
#include "hyperroute/entangle.hpp"
#include "hyperroute/harness.hpp"
#include "hyperroute/multiscale.hpp"
#include "hyperroute/overlay.hpp"
#include "hyperroute/routing.hpp"
#include "hyperroute/spectral.hpp"

namespace py = pybind11;
using namespace hyperroute;

PYBIND11_MODULE(_hyperroute, m) {
  m.doc() = "permutation routing on Ramanujan hypergraphs and expander overlays";

  py::class_<Hypergraph>(m, "Hypergraph")
      .def_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_readonly("hyperedges", &Hypergraph::hyperedges)
      .def_readonly("base_points", &Hypergraph::base_points)
      .def_readonly("d", &Hypergraph::d)
      .def_readonly("r", &Hypergraph::r)
      .def_readonly("regular", &Hypergraph::regular)
      .def("vertex_degrees", &Hypergraph::vertex_degrees);

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init<int>())
      .def("num_vertices", &WeightedGraph::num_vertices)
      .def("add_edge_weight", &WeightedGraph::add_edge_weight)
      .def("weight", &WeightedGraph::weight)
      .def("edges", &WeightedGraph::edges)
      .def("simple_support", &WeightedGraph::simple_support)
      .def("weighted_degree", &WeightedGraph::weighted_degree);

  py::class_<SpectralSummary>(m, "SpectralSummary")
      .def_readonly("lambda1", &SpectralSummary::lambda1)
      .def_readonly("lambda2", &SpectralSummary::lambda2)
      .def_readonly("lambdaN", &SpectralSummary::lambdaN)
      .def_readonly("lambda_star", &SpectralSummary::lambda_star)
      .def_readonly("beta", &SpectralSummary::beta)
      .def_readonly("ramanujan", &SpectralSummary::ramanujan)
      .def_readonly("diameter_bound", &SpectralSummary::diameter_bound);

  py::class_<RoutingResult>(m, "RoutingResult")
      .def_readonly("depth", &RoutingResult::depth)
      .def_readonly("measured_C", &RoutingResult::measured_C)
      .def_readonly("measured_D", &RoutingResult::measured_D)
      .def_readonly("realized", &RoutingResult::realized)
      .def_readonly("schedule", &RoutingResult::schedule)
      .def("lmr_depth", &RoutingResult::lmr_depth);

  py::class_<VoltageSearchResult>(m, "VoltageSearchResult")
      .def_readonly("total", &VoltageSearchResult::total)
      .def_readonly("ramanujan_count", &VoltageSearchResult::ramanujan_count)
      .def_readonly("fraction", &VoltageSearchResult::fraction)
      .def_readonly("best_beta", &VoltageSearchResult::best_beta)
      .def_readonly("best_assignment", &VoltageSearchResult::best_assignment);

  m.def("build_projective_plane", &build_projective_plane, py::arg("q"));
  m.def("build_random_regular_graph", &build_random_regular_graph, py::arg("n"),
        py::arg("d"), py::arg("seed"), py::arg("max_restarts") = 1000);
  m.def("build_random_regular_hypergraph", &build_random_regular_hypergraph,
        py::arg("n"), py::arg("d"), py::arg("r"), py::arg("seed"),
        py::arg("max_restarts") = 1000);
  m.def(
      "build_grid_hypergraph",
      [](int n, int r, const std::string& model) {
        return build_grid_hypergraph(
            {n, r, model == "3d" ? GridModel::k3D : GridModel::k2D});
      },
      py::arg("n"), py::arg("r") = 3, py::arg("model") = "2d");
  m.def("clique_expansion", &clique_expansion);
  m.def("union_layers", &union_layers);
  m.def("build_union_overlay", &build_union_overlay);
  m.def(
      "voltage_covering",
      [](const Hypergraph& base, int k, const std::vector<int>& voltages,
         const std::string& convention) {
        VoltageAssignment va;
        va.base = base;
        va.k = k;
        va.voltages = voltages;
        va.convention = lift_convention_from_string(convention);
        return voltage_covering(va);
      },
      py::arg("base"), py::arg("k"), py::arg("voltages"),
      py::arg("convention") = "base_shift");
  m.def("spectrum", [](const WeightedGraph& g) { return spectrum(g); });
  m.def("adjacency_eigenvalues",
        [](const WeightedGraph& g) { return adjacency_eigenvalues(g); });
  m.def("check_ramanujan_hypergraph", &check_ramanujan_hypergraph);
  m.def(
      "lambda_star_bound",
      [](int d, int r) {
        auto b = lambda_star_bound(d, r);
        return py::make_tuple(b.lambda_star, b.beta_bound);
      },
      py::arg("d"), py::arg("r"));
  m.def(
      "route",
      [](const WeightedGraph& g, const std::vector<int>& pi,
         const std::string& strategy, std::uint64_t seed) {
        SigmaStrategy s;
        if (strategy == "derandomized") s.kind = SigmaKind::kDerandomized;
        return route(g, pi, s, seed);
      },
      py::arg("graph"), py::arg("pi"), py::arg("strategy") = "uniform",
      py::arg("seed") = 1);
  m.def("partial_matching_route",
        [](const WeightedGraph& g, const std::vector<int>& pi, int k,
           std::uint64_t seed) { return partial_matching_route(g, pi, k, seed); });
  m.def("median_route_cd",
        [](const WeightedGraph& g, int trials, std::uint64_t seed) {
          return median_route_cd(g, trials, seed);
        });
  m.def(
      "search_ramanujan_voltages",
      [](const Hypergraph& base, int k, const std::string& mode, int samples,
         std::uint64_t seed, const std::string& convention) {
        return search_ramanujan_voltages(
            base, k, mode == "sample" ? SearchMode::kSample : SearchMode::kExhaustive,
            samples, seed, lift_convention_from_string(convention));
      },
      py::arg("base"), py::arg("k"), py::arg("mode") = "exhaustive",
      py::arg("samples") = 200, py::arg("seed") = 1,
      py::arg("convention") = "base_shift");
  m.def("cayley_spectrum_characters", &cayley_spectrum_characters);
  m.def(
      "qr_generators",
      [](int n) { return GeneratorFamily{}.generators(n); },
      py::arg("n"));
  m.def("distribution_cost", [](int n, int d_ent) {
    EntanglementConfig cfg;
    cfg.n = n;
    cfg.d_ent = d_ent;
    return distribution_cost(cfg);
  });
  m.def("crossover_rounds", [](int num_vertices, int d_ent, double t_route,
                               long long t_phys) {
    auto c = crossover_rounds(num_vertices, d_ent, t_route, t_phys);
    return py::make_tuple(c.t_dist, c.r_break, c.never_pays);
  });
  m.def("tower_prediction", &tower_prediction);
  m.def("run_greedy_until_stall", [](int n, int d, std::uint64_t seed) {
    auto rep = run_greedy_until_stall(n, d, seed);
    return py::make_tuple(rep.steps_to_stall, rep.stall_fraction,
                          rep.monotonicity_violations);
  });
  m.def("verify_all", [](std::uint64_t seed, const std::vector<std::string>& only) {
    auto rep = verify_all(seed, false, only);
    py::list out;
    for (const auto& c : rep.checks)
      out.append(py::make_tuple(c.id, c.pass, c.detail));
    return out;
  });
}
