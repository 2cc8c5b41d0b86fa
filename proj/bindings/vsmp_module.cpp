#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vsmp/bench.hpp"
#include "vsmp/error.hpp"
#include "vsmp/exact.hpp"
#include "vsmp/graph.hpp"
#include "vsmp/heuristics.hpp"
#include "vsmp/instances.hpp"
#include "vsmp/rng.hpp"
#include "vsmp/separation.hpp"

namespace py = pybind11;

namespace {

vsmp::Layout to_layout(const std::vector<vsmp::Vertex>& sequence) {
    return vsmp::Layout(sequence);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "vertex separation layouts: heuristics, exact solver, generators";

    const auto base = py::register_exception<vsmp::Error>(m, "Error");
    py::register_exception<vsmp::InvalidParameter>(m, "InvalidParameter", base);
    py::register_exception<vsmp::InvalidVertex>(m, "InvalidVertex", base);
    py::register_exception<vsmp::NotABijection>(m, "NotABijection", base);
    py::register_exception<vsmp::UnknownHeuristic>(m, "UnknownHeuristic", base);
    py::register_exception<vsmp::InstanceTooLarge>(m, "InstanceTooLarge", base);
    py::register_exception<vsmp::ParseError>(m, "ParseError", base);
    py::register_exception<vsmp::UnsupportedFormat>(m, "UnsupportedFormat", base);
    py::register_exception<vsmp::IoError>(m, "IoError", base);

    py::class_<vsmp::Graph>(m, "Graph")
        .def(py::init<int, const std::vector<vsmp::Edge>&>(),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_vertices", &vsmp::Graph::num_vertices)
        .def_property_readonly("num_edges", &vsmp::Graph::num_edges)
        .def_property_readonly("max_degree", &vsmp::Graph::max_degree)
        .def("degree", &vsmp::Graph::degree, py::arg("v"))
        .def("neighbors", &vsmp::Graph::neighbors, py::arg("v"))
        .def("has_edge", &vsmp::Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &vsmp::Graph::edges)
        .def("__repr__", [](const vsmp::Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("cut_values",
          [](const vsmp::Graph& g, const std::vector<vsmp::Vertex>& layout) {
              return vsmp::cut_profile(g, to_layout(layout)).values();
          },
          py::arg("graph"), py::arg("layout"));
    m.def("vertex_separation",
          [](const vsmp::Graph& g, const std::vector<vsmp::Vertex>& layout) {
              return vsmp::vertex_separation(g, to_layout(layout));
          },
          py::arg("graph"), py::arg("layout"));

    m.def("construct_layout",
          [](const vsmp::Graph& g, const std::string& heuristic, std::uint64_t seed) {
              vsmp::RandomSource rng(seed);
              return vsmp::construct(g, vsmp::parse_heuristic(heuristic), rng)
                  .sequence();
          },
          py::arg("graph"), py::arg("heuristic"), py::arg("seed") = 1);
    m.def("best_of_runs",
          [](const vsmp::Graph& g, const std::string& heuristic, int runs,
             std::uint64_t seed) {
              const auto best = vsmp::best_of_runs(g, heuristic, runs, seed);
              return py::make_tuple(best.layout.sequence(), best.vs, best.mean_vs,
                                    best.best_run);
          },
          py::arg("graph"), py::arg("heuristic"), py::arg("runs") = 30,
          py::arg("seed") = 1,
          "returns (layout, best_vs, mean_vs, best_run)");

    m.def("optimal_vs",
          [](const vsmp::Graph& g, int max_vertices) {
              const auto result = vsmp::optimal_vs(g, max_vertices);
              return py::make_tuple(result.layout.sequence(), result.vs);
          },
          py::arg("graph"), py::arg("max_vertices") = vsmp::kDefaultExactLimit,
          "returns (layout, vs)");

    m.def("gen_grid", &vsmp::gen_grid, py::arg("rows"), py::arg("cols"));
    m.def("gen_random_tree",
          [](int n, std::uint64_t seed) {
              vsmp::RandomSource rng(seed);
              return vsmp::gen_random_tree(n, rng);
          },
          py::arg("n"), py::arg("seed") = 1);
    m.def("gen_path", &vsmp::gen_path, py::arg("n"));
    m.def("gen_cycle", &vsmp::gen_cycle, py::arg("n"));
    m.def("gen_complete", &vsmp::gen_complete, py::arg("n"));
    m.def("gen_star", &vsmp::gen_star, py::arg("k"));

    m.def("parse_edge_list", &vsmp::parse_edge_list, py::arg("text"));
    m.def("to_edge_list", &vsmp::to_edge_list, py::arg("graph"));
    m.def("parse_matrix_market", &vsmp::parse_matrix_market, py::arg("text"));
    m.def("load_instance_file", &vsmp::load_instance_file, py::arg("path"));
    m.def("realize_instance",
          [](const std::string& spec) {
              return vsmp::realize_instance(vsmp::parse_instance_spec(spec));
          },
          py::arg("spec"));
    m.def("instance_id",
          [](const std::string& spec) {
              return vsmp::instance_id(vsmp::parse_instance_spec(spec));
          },
          py::arg("spec"));
}
