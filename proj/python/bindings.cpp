#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ballsearch/adaptive.hpp"
#include "ballsearch/errors.hpp"
#include "ballsearch/experiments.hpp"
#include "ballsearch/generators.hpp"
#include "ballsearch/hypercube_codes.hpp"
#include "ballsearch/io.hpp"
#include "ballsearch/report.hpp"
#include "ballsearch/separating.hpp"

namespace py = pybind11;
using namespace ballsearch;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_python(x));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_python(*it);
      return out;
    }
    default: throw std::runtime_error("unsupported JSON value");
  }
}

QuerySet to_queries(const std::vector<std::pair<Vertex, Radius>>& q) {
  QuerySet out;
  for (auto [c, r] : q) out.push_back({c, r});
  return out;
}

SearchOptions options(std::optional<std::uint64_t> budget, std::size_t limit) { return SearchOptions{budget, limit}; }

std::unique_ptr<Strategy> make_strategy(const Graph& g, const std::string& name,
                                        const std::vector<std::pair<Vertex, Radius>>& cover, const std::string& cover_mode) {
  if (name == "hypercube") return hypercube_strategy(g);
  if (name == "halving") return halving_strategy(g);
  if (name == "cover") {
    if (cover.empty()) throw std::invalid_argument("strategy 'cover' needs a non-empty cover");
    const auto mode = cover_mode == "exact" ? CoverMode::Exact : CoverMode::AtMost;
    return covering_then_locate_strategy(g, cover.front().second, to_queries(cover), mode);
  }
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Searching for an unknown vertex with ball queries";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("hypercube", &Graph::hypercube, py::arg("dimension"))
      .def_static("generate", [](const std::string& spec, std::uint64_t seed) { return generate(GraphSpec::parse(spec), seed); },
                  py::arg("spec"), py::arg("seed") = 0)
      .def_static("read", [](const std::string& path) { return read_graph_file(path); }, py::arg("path"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("is_hypercube", &Graph::is_hypercube)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("ball", [](const Graph& g, Vertex v, Radius r) { return ball(g, v, r).members<Vertex>(); },
        py::arg("graph"), py::arg("center"), py::arg("radius"));
  m.def("distance", [](const Graph& g, Vertex u, Vertex v) -> std::optional<Radius> {
        const auto d = distance(g, u, v);
        return d == kUnreachable ? std::nullopt : std::optional<Radius>(d);
      });
  m.def("diameter", &diameter);
  m.def("is_connected", &is_connected);

  m.def("is_separating", [](const Graph& g, const std::vector<std::pair<Vertex, Radius>>& q) {
        return is_separating(g, to_queries(q));
      }, py::arg("graph"), py::arg("queries"));
  m.def("is_identifying", [](const Graph& g, const std::vector<std::pair<Vertex, Radius>>& q, Radius r) {
        return is_identifying(g, to_queries(q), r);
      }, py::arg("graph"), py::arg("queries"), py::arg("r"));
  m.def("min_nonadaptive", [](const Graph& g, const std::string& mode, std::optional<std::uint64_t> budget) {
        return to_python(to_json(min_nonadaptive(g, RadiusConstraint::parse(mode), options(budget, 12))));
      }, py::arg("graph"), py::arg("mode") = "any", py::arg("budget") = py::none());
  m.def("metric_dimension", [](const Graph& g, std::optional<std::uint64_t> budget) {
        return to_python(to_json(metric_dimension(g, options(budget, 12))));
      }, py::arg("graph"), py::arg("budget") = py::none());
  m.def("sandwich_check", [](const Graph& g, std::optional<std::uint64_t> budget) {
        return to_python(to_json(sandwich_check(g, options(budget, 12))));
      }, py::arg("graph"), py::arg("budget") = py::none());
  m.def("katona_lower_bound", [](std::uint64_t set_size, std::uint64_t max_member) {
        const auto k = katona_lower_bound(set_size, max_member);
        return py::make_tuple(k.value, k.trivial_regime);
      }, py::arg("set_size"), py::arg("max_member_size"));

  m.def("run_search", [](const Graph& g, const std::string& strategy, const std::string& oracle, const std::string& mode,
                         const std::vector<std::pair<Vertex, Radius>>& cover, const std::string& cover_mode) {
        auto s = make_strategy(g, strategy, cover, cover_mode);
        std::unique_ptr<Oracle> o;
        if (oracle == "adversarial")
          o = std::make_unique<AdversarialOracle>();
        else if (oracle.rfind("fixed:", 0) == 0)
          o = std::make_unique<FixedOracle>(static_cast<Vertex>(std::stoul(oracle.substr(6))));
        else
          throw std::invalid_argument("oracle must be 'adversarial' or 'fixed:V'");
        return to_python(to_json(run_search(g, *s, *o, RadiusConstraint::parse(mode))));
      }, py::arg("graph"), py::arg("strategy"), py::arg("oracle") = "adversarial", py::arg("mode") = "any",
      py::arg("cover") = std::vector<std::pair<Vertex, Radius>>{}, py::arg("cover_mode") = "atmost");
  m.def("worst_case_queries", [](const Graph& g, const std::string& strategy, const std::string& mode,
                                 const std::vector<std::pair<Vertex, Radius>>& cover, const std::string& cover_mode) {
        return worst_case_queries(g, *make_strategy(g, strategy, cover, cover_mode), RadiusConstraint::parse(mode));
      }, py::arg("graph"), py::arg("strategy"), py::arg("mode") = "any",
      py::arg("cover") = std::vector<std::pair<Vertex, Radius>>{}, py::arg("cover_mode") = "atmost");
  m.def("exact_adaptive", [](const Graph& g, const std::string& mode, std::optional<std::uint64_t> budget) {
        return to_python(to_json(exact_adaptive(g, RadiusConstraint::parse(mode), options(budget, 10))));
      }, py::arg("graph"), py::arg("mode") = "any", py::arg("budget") = py::none());
  m.def("halving_query_bound", &halving_query_bound, py::arg("n"), py::arg("max_degree"), py::arg("additive") = 2);

  m.def("v_ball", &v_ball, py::arg("n"), py::arg("r"));
  m.def("sphere_covering_lower", &sphere_covering_lower, py::arg("n"), py::arg("r"));
  m.def("greedy_covering", [](unsigned n, unsigned r) { return to_python(to_json(greedy_covering(n, r))); });
  m.def("hamming_code", []() { return to_python(to_json(hamming_code(7))); });
  m.def("exact_K", [](unsigned n, unsigned r, std::optional<std::uint64_t> budget) {
        const auto res = exact_K(n, r, options(budget, 8));
        auto j = to_json(res.code);
        j["status"] = to_string(res.status);
        j["nodes_explored"] = res.nodes_explored;
        return to_python(j);
      }, py::arg("n"), py::arg("r"), py::arg("budget") = py::none());
  m.def("fano_verify", []() { return to_python(to_json(fano_verify())); });
  m.def("fano_signature", &fano_signature);

  m.def("predicted_diameter", [](std::size_t n, double p, double margin) { return predicted_diameter(n, p, margin).diameter; },
        py::arg("n"), py::arg("p"), py::arg("margin") = 2.0);
  m.def("ball_stats", [](const Graph& g, Radius r, std::size_t samples, std::uint64_t seed) {
        return to_python(to_json(ball_stats(g, r, samples, seed)));
      }, py::arg("graph"), py::arg("r"), py::arg("samples") = 200, py::arg("seed") = 0);
  m.def("gnp_experiment", [](std::size_t n, double p, Radius r, std::size_t trials, std::uint64_t seed,
                             std::optional<std::size_t> centers, unsigned threads) {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.p = p;
        cfg.r = r;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.centers_override = centers;
        cfg.threads = threads;
        py::gil_scoped_release release;
        auto report = gnp_center_experiment(cfg);
        py::gil_scoped_acquire acquire;
        return to_python(to_json(report));
      }, py::arg("n"), py::arg("p"), py::arg("r") = 1, py::arg("trials") = 1, py::arg("seed") = 0,
      py::arg("centers") = py::none(), py::arg("threads") = 1);
}
