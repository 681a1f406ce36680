#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cyclebound/cli.hpp"
#include "cyclebound/families.hpp"
#include "cyclebound/fragments.hpp"
#include "cyclebound/graph6.hpp"
#include "cyclebound/invariants.hpp"
#include "cyclebound/path_systems.hpp"
#include "cyclebound/schemes.hpp"
#include "cyclebound/search.hpp"
#include "cyclebound/theorems.hpp"

namespace py = pybind11;
using namespace cyclebound;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
std::string invariants_json(const Graph& g, std::optional<long> budget_ms) {
  Budget budget = Budget::from_millis(budget_ms);
  const InvariantBundle b = compute_invariants(g, budget);
  Json j;
  j["n"] = b.n;
  j["m"] = g.size();
  j["delta"] = b.delta;
  j["kappa"] = b.kappa;
  j["alpha"] = b.alpha;
  j["c"] = b.c;
  j["hamiltonian"] = b.hamiltonian;
  j["witness"] = b.witness.vertices;
  return j.dump();
}

std::string fragments_json(const Graph& g) {
  const FragmentCatalog cat = enumerate_fragments(g);
  Json list = Json::array();
  for (std::size_t i = 0; i < cat.fragments.size(); ++i) {
    const Fragment& f = cat.fragments[i];
    list.push_back(Json{{"X", to_list(f.vertices)},
                       {"S", to_list(f.cutset)},
                       {"complement", to_list(f.complement)},
                       {"endfragment", static_cast<bool>(cat.endfragment[i])}});
  }
  Json out;
  out["kappa"] = cat.kappa;
  out["fragments"] = list;
  return out.dump();
}

std::string verify_json(const std::string& statement, const Graph& g, std::optional<long> budget_ms) {
  Budget budget = Budget::from_millis(budget_ms);
  const StatementId id = parse_statement(statement);
  StatementReport r = check_statement(g, id, budget);
  if (r.status == Verdict::kCounterexample) {
    Budget again = Budget::from_millis(budget_ms);
    r = confirm_candidate(g, id, r, again);
  }
  return to_json(r).dump();
}

std::string lemma_json(const std::string& name, const Graph& g) {
  for (auto which : {StructuralLemma::kL12, StructuralLemma::kL13, StructuralLemma::kL14, StructuralLemma::kL15}) {
    if (name == lemma_name(which)) return to_json(check_structural_lemma(g, which)).dump();
  }
  throw std::invalid_argument("lemma must be one of L12, L13, L14, L15");
}

std::optional<std::string> min_host_json(const std::vector<int>& sizes, int r, const std::string& host, int cap) {
  const auto found = min_host_bruteforce(sizes, r, parse_host(host), cap);
  if (!found) return std::nullopt;
  return Json{{"length", found->length}, {"classes", found->classes}}.dump();
}

std::string scan_json(const std::string& config) {
  const ScanOutcome o = run_scan(scan_config_from_json(Json::parse(config)));
  return to_json(o).dump();
}

py::tuple cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_cyclebound, m) {
  m.doc() = "Exact circumference, connectivity, fragment and scheme tools for small graphs";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<SearchInfeasible>(m, "SearchInfeasible");
  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<FamilySpecError>(m, "FamilySpecError", PyExc_ValueError);
  py::register_exception<SchemeError>(m, "SchemeError", PyExc_ValueError);
  py::register_exception<ScanError>(m, "ScanError");

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("construct", [](const std::string& s) { return build(parse_family(s)); })
      .def("graph6", [](const Graph& g) { return write_graph6(g); })
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("add_edge", &Graph::add_edge)
      .def("is_connected", &Graph::is_connected)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

  m.def("min_degree", &min_degree);
  m.def("connectivity", [](const Graph& g) { return connectivity(g); });
  m.def("connectivity_exhaustive", [](const Graph& g) { return connectivity_exhaustive(g); });
  m.def("independence_number", [](const Graph& g) { return independence_number(g); });
  m.def("independence_number_exhaustive", [](const Graph& g) { return independence_number_exhaustive(g); });
  m.def("circumference", [](const Graph& g) {
    auto c = circumference(g);
    return py::make_tuple(c.length, c.witness.vertices);
  });
  m.def("circumference_dp", [](const Graph& g) { return circumference_dp(g); });
  m.def("_invariants", &invariants_json, py::arg("g"), py::arg("budget_ms") = py::none());
  m.def("_fragments", &fragments_json);
  m.def("_verify", &verify_json, py::arg("statement"), py::arg("g"), py::arg("budget_ms") = py::none());
  m.def("_lemma", &lemma_json);
  m.def("scheme_bound", [](const std::string& lemma, const std::vector<int>& sizes, int r, const std::string& host) {
    return scheme_bound(BoundQuery{parse_scheme_lemma(lemma), sizes, r, parse_host(host)});
  });
  m.def("_min_host", &min_host_json, py::arg("sizes"), py::arg("r"), py::arg("host"),
        py::arg("cap") = kDefaultHostCap);
  m.def("_scan", &scan_json);
  m.def("cli", &cli, py::arg("args"), py::arg("input") = std::string());
  m.attr("statements") = [] {
    std::vector<std::string> names;
    for (StatementId id : kAllStatements) names.emplace_back(statement_name(id));
    return names;
  }();
}
