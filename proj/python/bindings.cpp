#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "indseq/bipartite_bounds.hpp"
#include "indseq/builder.hpp"
#include "indseq/canonical.hpp"
#include "indseq/cli.hpp"
#include "indseq/enumerate.hpp"
#include "indseq/errors.hpp"
#include "indseq/experiment.hpp"
#include "indseq/extremal.hpp"
#include "indseq/graph6.hpp"
#include "indseq/json_io.hpp"
#include "indseq/random.hpp"
#include "indseq/seq_analysis.hpp"

namespace py = pybind11;
using namespace indseq;

namespace {

// Coefficients cross the boundary as decimal strings; the Python side
// turns them into ints.
std::vector<std::string> digits(const CoeffSeq& s) { return s.to_strings(); }

CountOptions count_budget(std::uint64_t nodes) {
  CountOptions o;
  o.node_budget = nodes;
  return o;
}

BipartiteGraph bipartite(int n, const std::vector<VertexSet>& rows) {
  return BipartiteGraph(n, rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Independent set sequences of graphs";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());

  m.attr("SCHEMA") = kSchema;
  const auto default_budget = CountOptions{}.node_budget;

  m.def("to_graph6", [](const std::string& text) {
    return write_graph6(parse_graph_text(text));
  }, py::arg("graph"), "Normalise a graph6 string or builder expression to graph6.");

  m.def("graph_info", [](const std::string& text) {
    const Graph g = parse_graph_text(text);
    py::dict d;
    d["n"] = g.order();
    d["edges"] = g.edges();
    d["min_degree"] = min_degree(g);
    d["connected"] = is_connected(g);
    d["bipartite"] = is_bipartite(g);
    return d;
  }, py::arg("graph"));

  m.def("canonical_graph6", [](const std::string& text) {
    return write_graph6(canonical_form(parse_graph_text(text)));
  }, py::arg("graph"));

  m.def("ind_seq", [](const std::string& text, std::uint64_t budget) {
    return digits(ind_seq(parse_graph_text(text), count_budget(budget)));
  }, py::arg("graph"), py::arg("budget_nodes") = default_budget);

  m.def("analyze_json", [](const std::vector<std::string>& seq) {
    return to_json(analyze(CoeffSeq::from_strings(seq))).dump();
  }, py::arg("sequence"));

  m.def("is_real_rooted", [](const std::vector<std::string>& seq) {
    return is_real_rooted(CoeffSeq::from_strings(seq));
  }, py::arg("sequence"));

  m.def("kdn_seq", [](int delta, int n) { return digits(kdn_seq(delta, n)); },
        py::arg("delta"), py::arg("n"));

  m.def("enumerate_graphs", [](int n, int delta, int max_order) {
    EnumerationOptions o;
    o.max_order = max_order;
    std::vector<std::string> out;
    py::gil_scoped_release release;
    for (const auto& g : enumerate_all(n, delta, o)) out.push_back(write_graph6(g));
    return out;
  }, py::arg("n"), py::arg("delta") = 0,
     py::arg("max_order") = EnumerationOptions{}.max_order);

  m.def("sample_bipartite", [](int n, double p, std::uint64_t seed, std::uint64_t stream) {
    return sample_bipartite(n, p, RngSpec{seed, stream}).rows();
  }, py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("stream") = 0);

  m.def("bound_profile_json", [](int n, const std::vector<VertexSet>& rows) {
    return to_json(make_profile(bipartite(n, rows))).dump();
  }, py::arg("n"), py::arg("rows"));

  m.def("sandwich_json", [](int n, const std::vector<VertexSet>& rows) {
    return to_json(coefficient_sandwich(bipartite(n, rows))).dump();
  }, py::arg("n"), py::arg("rows"));

  m.def("properties_json", [](int n, const std::vector<VertexSet>& rows, double p) {
    return to_json(as_properties(bipartite(n, rows), p)).dump();
  }, py::arg("n"), py::arg("rows"), py::arg("p"));

  m.def("verify_max_total_json",
        [](int n, int delta, const std::string& x, int workers) {
    ExtremalOptions o;
    o.workers = workers;
    std::optional<Rational> weight;
    if (!x.empty()) weight = rational_from_string(x);
    py::gil_scoped_release release;
    return to_json(verify_max_total(n, delta, weight, o)).dump();
  }, py::arg("n"), py::arg("delta"), py::arg("x") = "", py::arg("workers") = 1);

  m.def("verify_fixed_size_json", [](int n, int delta, int t, int workers) {
    ExtremalOptions o;
    o.workers = workers;
    py::gil_scoped_release release;
    return to_json(verify_fixed_size(n, delta, t, o)).dump();
  }, py::arg("n"), py::arg("delta"), py::arg("t"), py::arg("workers") = 1);

  m.def("thresholds", [](const std::string& x) {
    const Threshold t = thresholds(rational_from_string(x));
    return py::make_tuple(static_cast<double>(t.c_x), static_cast<double>(t.d_x));
  }, py::arg("x"), "(C_x, D_x) as floats.");

  m.def("n_min", [](const std::string& x, int delta) {
    return static_cast<double>(n_min(rational_from_string(x), delta));
  }, py::arg("x"), py::arg("delta"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, py::bytes(out.str()), err.str());
  }, py::arg("args"), "Run the indseq command; returns (exit code, stdout bytes, stderr).");
}
