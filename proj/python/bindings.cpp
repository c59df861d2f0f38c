#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mrdd/families.hpp"
#include "mrdd/graph.hpp"
#include "mrdd/roman.hpp"
#include "mrdd/spectral.hpp"
#include "mrdd/verify.hpp"

namespace py = pybind11;
using namespace mrdd;

namespace {

Family parse_family(const std::string& name) {
  if (name == "complete") return Family::kComplete;
  if (name == "star") return Family::kStar;
  if (name == "bipartite") return Family::kBipartite;
  if (name == "crown") return Family::kCrown;
  if (name == "spider") return Family::kSpider;
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  throw std::invalid_argument("unknown family '" + name + "'");
}

Graph family_graph(const std::string& name, int param) {
  return generate({parse_family(name), param});
}

std::vector<std::vector<int>> distances(const Graph& g) {
  DistanceMatrix d = all_pairs_distances(g);
  std::vector<std::vector<int>> out(d.size(), std::vector<int>(d.size()));
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) out[i][j] = d.at(i, j);
  return out;
}

MrddMatrix matrix_for(const Graph& g, const std::optional<RomanDominatingFunction>& f) {
  const RomanDominatingFunction rdf = f ? *f : min_roman_domination(g).canonical;
  return build_mrdd_matrix(all_pairs_distances(g), rdf);
}

std::vector<std::vector<long long>> matrix_rows(const Graph& g,
                                                const std::optional<RomanDominatingFunction>& f) {
  MrddMatrix a = matrix_for(g, f);
  std::vector<std::vector<long long>> out(a.size(), std::vector<long long>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out[i][j] = a.at(i, j);
  return out;
}

std::vector<std::string> charpoly_strings(const Graph& g,
                                          const std::optional<RomanDominatingFunction>& f) {
  CharPoly p = char_poly(matrix_for(g, f));
  std::vector<std::string> out;
  out.reserve(p.c.size());
  for (const BigInt& c : p.c) out.push_back(c.str());
  return out;
}

py::dict family_report_dict(const FamilyReport& rep) {
  py::dict d;
  d["family"] = family_name(rep.spec.family);
  d["param"] = rep.spec.param;
  d["gamma_r_predicted"] = rep.gamma_r_predicted;
  d["gamma_r_computed"] = rep.gamma_r_computed;
  d["gamma_r_match"] = rep.gamma_r_match;
  if (rep.energy_is_interval)
    d["energy_predicted"] = py::make_tuple(static_cast<double>(rep.energy_predicted_low),
                                           static_cast<double>(rep.energy_predicted_high));
  else
    d["energy_predicted"] = static_cast<double>(rep.energy_predicted_low);
  d["energy_computed"] = rep.energy_computed;
  d["energy_abs_error"] = rep.energy_abs_error;
  d["energy_match"] = rep.energy_match;
  d["charpoly_match"] = rep.charpoly_match;
  d["alt_degree_ok"] = rep.alt_degree_ok;
  d["alt_charpoly_match"] = rep.alt_charpoly_match;
  d["notes"] = rep.notes;
  return d;
}

py::dict check_row_dict(const CheckRow& row) {
  py::dict d;
  d["graph"] = row.graph;
  d["formula"] = row.formula_id;
  d["as_printed"] = row.as_printed ? py::cast(*row.as_printed) : py::none();
  d["corrected"] = row.corrected ? py::cast(*row.corrected) : py::none();
  d["lower"] = row.lower ? py::cast(*row.lower) : py::none();
  d["upper"] = row.upper ? py::cast(*row.upper) : py::none();
  d["observed"] = row.observed;
  d["slack"] = row.slack;
  d["holds"] = row.holds;
  d["note"] = row.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "minimum Roman dominating distance energy of graphs";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<RomanDominatingFunction>(m, "RomanDominatingFunction")
      .def(py::init([](std::vector<int> v0, std::vector<int> v1, std::vector<int> v2) {
             return RomanDominatingFunction{std::move(v0), std::move(v1), std::move(v2)};
           }),
           py::arg("v0"), py::arg("v1"), py::arg("v2"))
      .def_readonly("v0", &RomanDominatingFunction::v0)
      .def_readonly("v1", &RomanDominatingFunction::v1)
      .def_readonly("v2", &RomanDominatingFunction::v2)
      .def_property_readonly("weight", &RomanDominatingFunction::weight)
      .def("__repr__", [](const RomanDominatingFunction& f) {
        return "RomanDominatingFunction(weight=" + std::to_string(f.weight()) + ")";
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("energy", &Spectrum::energy)
      .def_readonly("residual", &Spectrum::residual);

  m.def("family", &family_graph, py::arg("name"), py::arg("param"),
        "build a member of a named graph family");
  m.def("is_connected", &is_connected, py::arg("g"));
  m.def("diameter", &diameter, py::arg("g"));
  m.def("wiener_index", &wiener_index, py::arg("g"));
  m.def("distances", &distances, py::arg("g"), "all-pairs distances, -1 for unreachable");

  m.def("is_valid_rdf", &is_valid_rdf, py::arg("g"), py::arg("f"));
  m.def(
      "gamma_r", [](const Graph& g) { return min_roman_domination(g).gamma_r; }, py::arg("g"),
      "Roman domination number");
  m.def(
      "gamma", [](const Graph& g) { return min_domination(g).gamma; }, py::arg("g"),
      "domination number");
  m.def(
      "min_rdf", [](const Graph& g) { return min_roman_domination(g).canonical; }, py::arg("g"),
      "canonical minimum Roman dominating function");
  m.def(
      "min_rdfs",
      [](const Graph& g, int cap) {
        EnumerateResult r = enumerate_min_rdfs(g, cap);
        return py::make_tuple(r.rdfs, r.truncated);
      },
      py::arg("g"), py::arg("cap") = 10000,
      "all minimum Roman dominating functions in canonical order, with a truncation flag");

  m.def("mrdd_matrix", &matrix_rows, py::arg("g"), py::arg("f") = py::none(),
        "distance matrix with Roman labels on the diagonal, as nested lists");
  m.def("char_poly", &charpoly_strings, py::arg("g"), py::arg("f") = py::none(),
        "exact characteristic polynomial coefficients c_0..c_n as decimal strings");
  m.def(
      "spectrum",
      [](const Graph& g, const std::optional<RomanDominatingFunction>& f, double tol) {
        return eigenvalues(matrix_for(g, f), JacobiOptions{.tol = tol});
      },
      py::arg("g"), py::arg("f") = py::none(), py::arg("tol") = 1e-10);
  m.def(
      "energy",
      [](const Graph& g, const std::optional<RomanDominatingFunction>& f) {
        return eigenvalues(matrix_for(g, f)).energy;
      },
      py::arg("g"), py::arg("f") = py::none(),
      "sum of absolute eigenvalues of the labeled distance matrix");

  m.def(
      "verify_family",
      [](const std::string& name, int param, double tol) {
        return family_report_dict(verify_family({parse_family(name), param}, tol));
      },
      py::arg("name"), py::arg("param"), py::arg("tol") = 1e-8,
      "check a family member against its closed forms");
  m.def(
      "run_checks",
      [](const Graph& g, const std::string& label, double tol) {
        std::vector<py::dict> out;
        for (const CheckRow& row : run_all_checks(g, label, tol)) out.push_back(check_row_dict(row));
        return out;
      },
      py::arg("g"), py::arg("label") = "graph", py::arg("tol") = 1e-8,
      "run every applicable identity and bound check");
}
