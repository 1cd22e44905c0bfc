#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qglab/bounds.hpp"
#include "qglab/families.hpp"
#include "qglab/fem.hpp"
#include "qglab/graph.hpp"
#include "qglab/spectral.hpp"
#include "qglab/suite.hpp"
#include "qglab/surgery.hpp"
#include "qglab/verify.hpp"

namespace py = pybind11;
using namespace qglab;

namespace {

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["graph"] = r.graph;
  d["L"] = r.L;
  d["D"] = r.D;
  d["beta"] = r.beta;
  d["k"] = r.k;
  d["value"] = r.value;
  d["bound"] = r.bound;
  d["variant"] = r.variant;
  d["verdict"] = to_string(r.verdict);
  d["margin"] = r.margin;
  py::dict extra;
  for (const auto& [key, value] : r.extra) extra[py::str(key)] = value;
  d["extra"] = extra;
  d["note"] = r.note;
  return d;
}

py::dict table_dict(const Table& t) {
  py::dict d;
  d["id"] = t.id;
  d["columns"] = t.columns;
  d["rows"] = t.rows;
  d["verdict"] = to_string(t.verdict);
  d["margin"] = t.margin;
  d["note"] = t.note;
  return d;
}

SolverOptions options(double tol_k, const std::string& locator) {
  SolverOptions o;
  o.tol_k = tol_k;
  if (locator == "scan") o.locator = RootLocator::SingularScan;
  else if (locator != "inertia") throw py::value_error("locator must be 'inertia' or 'scan'");
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral computations on compact metric graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<SurgeryError>(m, "SurgeryError", PyExc_ValueError);
  py::register_exception<SpectralError>(m, "SpectralError", PyExc_RuntimeError);

  py::class_<MetricGraph>(m, "MetricGraph")
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_static("read", &read_graph_file, py::arg("path"))
      .def("to_mgf", [](const MetricGraph& g) { return to_mgf(g); })
      .def_property_readonly("vertex_count", &MetricGraph::vertex_count)
      .def_property_readonly("edge_count", &MetricGraph::edge_count)
      .def_property_readonly("vertex_ids",
                             [](const MetricGraph& g) {
                               std::vector<std::string> ids;
                               for (const Vertex& v : g.vertices()) ids.push_back(v.id);
                               return ids;
                             })
      .def_property_readonly("edge_ids",
                             [](const MetricGraph& g) {
                               std::vector<std::string> ids;
                               for (const Edge& e : g.edges()) ids.push_back(e.id);
                               return ids;
                             })
      .def_property_readonly("edge_lengths",
                             [](const MetricGraph& g) {
                               std::vector<double> out;
                               for (const Edge& e : g.edges()) out.push_back(e.length);
                               return out;
                             })
      .def_property_readonly("dirichlet", [](const MetricGraph& g) { return g.dirichlet_vertices(); })
      .def("vertex_index", &MetricGraph::vertex_index)
      .def("edge_index", &MetricGraph::edge_index)
      .def("__repr__", [](const MetricGraph& g) { return "<MetricGraph " + describe(g) + ">"; });

  m.def("total_length", &total_length);
  m.def("betti", &betti);
  m.def("diameter", &diameter);
  m.def("dirichlet_eccentricity", &dirichlet_eccentricity);
  m.def("max_loop_length", &max_loop_length);

  m.def("family_names", &family_names);
  m.def("make_family", &make_family, py::arg("name"), py::arg("params"));
  m.def("make_star", [](double L, double D, int n) { return make_star({L, D, n}); }, py::arg("L"), py::arg("D"),
        py::arg("n"));
  m.def("make_dn", &make_dn, py::arg("L"), py::arg("D"), py::arg("n"));
  m.def("make_tn", &make_tn, py::arg("L"), py::arg("D"), py::arg("k"), py::arg("n"));
  m.def("star_first_dirichlet", [](double L, double D, int n) {
    const double k = star_secular_root({L, D, n});
    return k * k;
  });

  m.def(
      "eigenvalues",
      [](const MetricGraph& g, std::size_t count, double tol_k, const std::string& locator) {
        return eigenvalues(g, count, options(tol_k, locator)).values;
      },
      py::arg("graph"), py::arg("count"), py::arg("tol_k") = 1e-13, py::arg("locator") = "inertia");
  m.def("eigenvalue_count", &eigenvalue_count, py::arg("graph"), py::arg("k"),
        "Number of eigenvalues strictly below k^2");
  m.def(
      "eigenfunction_values",
      [](const MetricGraph& g, std::size_t index, const std::vector<std::pair<std::size_t, double>>& points) {
        const Eigenpair ep = eigenfunctions_at(g, index).front();
        std::vector<double> out;
        for (const auto& [edge, x] : points) out.push_back(ep.value(edge, x));
        return out;
      },
      py::arg("graph"), py::arg("index"), py::arg("points"),
      "First normalized eigenfunction of the index-th eigenvalue sampled at (edge, offset) points");
  m.def(
      "fem_eigenvalues",
      [](const MetricGraph& g, std::size_t count, double h) {
        std::vector<double> out;
        for (const FemEstimate& e : fem_eigenvalues(g, count, h)) out.push_back(e.extrapolated);
        return out;
      },
      py::arg("graph"), py::arg("count"), py::arg("h") = 0.0);

  m.def("omega_thm1", [](double L, double D) { return omega_thm1(L, D).omega; });
  m.def("omega_thm2", [](double L, double D, double k, double beta) { return omega_thm2(L, D, k, beta).omega; });
  m.def("omega_star", [](double L, double D) { return omega_star(L, D).omega; });
  m.def("wentzell_eigenvalue", [](double D, double mass) { return wentzell_eigenvalue(D, mass).omega_squared; });
  m.def("omega_conjecture", [](double L, double D, double k) { return omega_conjecture(L, D, k).omega; });
  m.def("gamma", [](double L, double D, double k, double beta) { return qglab::gamma(L, D, k, beta); });
  m.def("closed_form_bounds", [](const std::string& tag, const std::map<std::string, double>& params) {
    std::vector<std::tuple<std::string, std::string, double>> out;
    for (const BoundConstant& b : closed_form_bounds(tag, params)) out.emplace_back(b.label, b.variant, b.value);
    return out;
  });

  m.def("glue", &glue);
  m.def("cut", [](const MetricGraph& g, std::size_t edge, double offset) { return cut(g, {edge, offset}); });
  m.def("lengthen", &lengthen);
  m.def("cut_loop_midpoints", &cut_loop_midpoints);

  m.def("check_thm1", [](const MetricGraph& g) { return report_dict(check_thm1(g)); });
  m.def("check_thm2", [](const MetricGraph& g, int k) { return report_dict(check_thm2(g, k)); });
  m.def("check_key_lemma", [](const MetricGraph& h) { return report_dict(check_key_lemma(h)); });
  m.def("check_nodal_count", [](const MetricGraph& g, int k) { return report_dict(check_nodal_count(g, k)); });
  m.def("discrepancy_report", [] {
    py::list out;
    for (const Table& t : discrepancy_report()) out.append(table_dict(t));
    return out;
  });
  m.def(
      "random_graph",
      [](std::uint64_t seed, int beta, int min_edges, int max_edges, bool jitter, int dirichlet_leaves) {
        RandomGraphSpec s;
        s.seed = seed;
        s.beta = beta;
        s.min_edges = min_edges;
        s.max_edges = max_edges;
        s.jitter = jitter;
        s.dirichlet_leaves = dirichlet_leaves;
        return random_graph(s);
      },
      py::arg("seed"), py::arg("beta") = 0, py::arg("min_edges") = 2, py::arg("max_edges") = 6,
      py::arg("jitter") = false, py::arg("dirichlet_leaves") = 0);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        SuiteConfig c;
        c.seed = seed;
        py::list out;
        for (const SuiteResult& s : run_suite(name, c))
          for (const SuiteCheck& ch : s.checks) {
            py::dict d;
            d["suite"] = s.name;
            d["check"] = ch.name;
            d["passed"] = ch.passed;
            d["margin"] = ch.margin;
            d["detail"] = ch.detail;
            out.append(d);
          }
        return out;
      },
      py::arg("name"), py::arg("seed") = 7);
}
