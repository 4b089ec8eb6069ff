// Python bindings for the Myerson-value toolkit. Coalitions cross the
// boundary as plain integer bit masks (bit v set <=> node v is a member),
// which keeps the python surface free of wrapper types.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "myerson/allocation.hpp"
#include "myerson/bench.hpp"
#include "myerson/bounds.hpp"
#include "myerson/coalition.hpp"
#include "myerson/exact.hpp"
#include "myerson/game.hpp"
#include "myerson/graph.hpp"
#include "myerson/samplers.hpp"

namespace py = pybind11;
using namespace myerson;

namespace {

GameSpec spec_from_kwargs(const std::string& type, int n, std::uint64_t seed,
                          double max_gain, double max_singleton,
                          double size_exponent) {
  GameSpec spec;
  spec.type = game_type_from_string(type);
  spec.n = n;
  spec.seed = seed;
  spec.max_gain = max_gain;
  spec.max_singleton = max_singleton;
  spec.size_exponent = size_exponent;
  return spec;
}

SamplerConfig config_from_args(std::uint64_t samples, std::uint64_t seed,
                               int exact_levels) {
  SamplerConfig config;
  config.samples = samples;
  config.seed = seed;
  config.exact_levels = exact_levels;
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact and Monte Carlo computation of the Myerson value of "
      "graph-restricted cooperative games";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::node_count)
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("neighbors_of",
           [](const Graph& g, int v) { return g.neighbors_of(v).bits(); },
           py::arg("v"))
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.node_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("make_cycle", &make_cycle, py::arg("n"));
  m.def("make_star", &make_star, py::arg("n"));
  m.def("make_erdos_renyi", &make_erdos_renyi, py::arg("n"),
        py::arg("edge_prob"), py::arg("seed"));
  m.def("make_barabasi_albert", &make_barabasi_albert, py::arg("n"),
        py::arg("m0"), py::arg("m"), py::arg("seed"));
  m.def("serialize_graph", &serialize_graph, py::arg("g"));
  m.def(
      "parse_graph", [](const std::string& text) { return parse_graph(text); },
      py::arg("text"));

  m.def(
      "is_connected",
      [](const Graph& g, std::uint64_t c) {
        return is_connected(g, Coalition(c));
      },
      py::arg("g"), py::arg("coalition"));
  m.def(
      "neighbors",
      [](const Graph& g, std::uint64_t c) {
        return neighbors(g, Coalition(c)).bits();
      },
      py::arg("g"), py::arg("coalition"));
  m.def(
      "components",
      [](const Graph& g, std::uint64_t c) {
        std::vector<std::uint64_t> out;
        for (Coalition k : components(g, Coalition(c))) out.push_back(k.bits());
        return out;
      },
      py::arg("g"), py::arg("coalition"));
  m.def("connected_coalitions", [](const Graph& g) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    enumerate_connected(g, [&](Coalition c, Coalition nb) {
      out.emplace_back(c.bits(), nb.bits());
    });
    return out;
  });

  py::class_<CharacteristicFunction>(m, "CharacteristicFunction")
      .def_property_readonly("n", &CharacteristicFunction::player_count)
      .def("__call__",
           [](const CharacteristicFunction& v, std::uint64_t mask) {
             return v(Coalition(mask));
           },
           py::arg("coalition"));

  m.def(
      "custom_game",
      [](int n, const std::function<double(std::uint64_t)>& fn) {
        return CharacteristicFunction(
            n, [fn](Coalition c) { return fn(c.bits()); });
      },
      py::arg("n"), py::arg("fn"),
      "Wrap a python callable over integer coalition masks");
  m.def(
      "generate_game",
      [](const std::string& type, int n, std::uint64_t seed, double max_gain,
         double max_singleton, double size_exponent) {
        return generate_game(spec_from_kwargs(type, n, seed, max_gain,
                                              max_singleton, size_exponent));
      },
      py::arg("type"), py::arg("n"), py::arg("seed") = 0,
      py::arg("max_gain") = 3.0, py::arg("max_singleton") = 1.0,
      py::arg("size_exponent") = 2.0);
  m.def(
      "load_game", [](const std::string& text) { return load_game(text); },
      py::arg("text"),
      "Parse either a game table or a game spec string");
  m.def("store_game_table", &store_game_table, py::arg("v"));
  m.def(
      "restrict_to_graph",
      [](const Graph& g, const CharacteristicFunction& v) {
        return restrict_to_graph(g, v);
      },
      py::arg("g"), py::arg("v"));
  m.def(
      "marginal_contribution",
      [](const CharacteristicFunction& v, std::uint64_t c, int i) {
        return marginal_contribution(v, Coalition(c), i);
      },
      py::arg("v"), py::arg("coalition"), py::arg("i"));

  py::class_<Allocation>(m, "Allocation")
      .def_readonly("values", &Allocation::values)
      .def_readonly("method", &Allocation::method)
      .def_readonly("samples_used", &Allocation::samples_used)
      .def_readonly("elapsed_ns", &Allocation::elapsed_ns)
      .def("__len__",
           [](const Allocation& a) { return a.values.size(); })
      .def("__getitem__",
           [](const Allocation& a, std::size_t i) { return a.values.at(i); })
      .def("__repr__", [](const Allocation& a) {
        return "Allocation(method=" + a.method +
               ", n=" + std::to_string(a.values.size()) + ")";
      });

  m.def("shapley_subsets", &shapley_subsets, py::arg("v"));
  m.def("myerson_exact_subsets", &myerson_exact_subsets, py::arg("g"),
        py::arg("v"));
  m.def("myerson_exact_connected", &myerson_exact_connected, py::arg("g"),
        py::arg("v"));
  m.def("count_connected_coalitions", &count_connected_coalitions,
        py::arg("g"));

  m.def(
      "approx_permutations",
      [](const Graph& g, const CharacteristicFunction& v,
         std::uint64_t samples, std::uint64_t seed) {
        return approx_permutations(g, v, config_from_args(samples, seed, 0));
      },
      py::arg("g"), py::arg("v"), py::arg("samples"), py::arg("seed") = 0);
  m.def(
      "approx_hybrid",
      [](const Graph& g, const CharacteristicFunction& v,
         std::uint64_t samples, int exact_levels, std::uint64_t seed) {
        return approx_hybrid(g, v,
                             config_from_args(samples, seed, exact_levels));
      },
      py::arg("g"), py::arg("v"), py::arg("samples"),
      py::arg("exact_levels") = 0, py::arg("seed") = 0);
  m.def(
      "approx_connected",
      [](const Graph& g, const CharacteristicFunction& v,
         std::uint64_t samples, std::uint64_t seed) {
        return approx_connected(g, v, config_from_args(samples, seed, 0));
      },
      py::arg("g"), py::arg("v"), py::arg("samples"), py::arg("seed") = 0);

  m.def("l1_error", &l1_error, py::arg("a"), py::arg("b"));

  m.def(
      "samples_required",
      [](const std::string& alg, double epsilon, double delta, double range,
         int n, int exact_levels, const std::string& formula) {
        BoundParams params;
        params.epsilon = epsilon;
        params.delta = delta;
        params.range = range;
        params.n = n;
        params.exact_levels = exact_levels;
        if (formula == "standard") {
          params.formula = BoundFormula::standard;
        } else if (formula == "paper" || formula == "cube_root") {
          params.formula = BoundFormula::cube_root;
        } else {
          throw std::invalid_argument("unknown bound formula: " + formula);
        }
        BoundAlg a;
        if (alg == "permutations") {
          a = BoundAlg::permutations;
        } else if (alg == "hybrid") {
          a = BoundAlg::hybrid;
        } else if (alg == "connected") {
          a = BoundAlg::connected;
        } else {
          throw std::invalid_argument("unknown bound algorithm: " + alg);
        }
        return samples_required(params, a);
      },
      py::arg("alg"), py::arg("epsilon"), py::arg("delta"), py::arg("range"),
      py::arg("n"), py::arg("exact_levels") = 0, py::arg("formula") = "paper");
  m.def("alpha_connected", &alpha_connected, py::arg("n"));
  m.def(
      "range_estimate",
      [](const CharacteristicFunction& v, const Graph& g,
         const std::string& mode, int exact_levels) {
        RangeMode rm;
        if (mode == "sign_definite") {
          rm = RangeMode::sign_definite;
        } else if (mode == "general") {
          rm = RangeMode::general;
        } else if (mode == "hybrid") {
          rm = RangeMode::hybrid;
        } else if (mode == "connected") {
          rm = RangeMode::connected;
        } else {
          throw std::invalid_argument("unknown range mode: " + mode);
        }
        return range_estimate(v, g, rm, exact_levels);
      },
      py::arg("v"), py::arg("g"), py::arg("mode"),
      py::arg("exact_levels") = 0);

  m.def("bench_scale_free_csv",
        []() { return bench_suite(scale_free_grid()); },
        "Run the scale-free benchmark grid and return its CSV text");
}
