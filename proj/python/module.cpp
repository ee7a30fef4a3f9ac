#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diozi/circuit.hpp"
#include "diozi/errors.hpp"
#include "diozi/gadgets.hpp"
#include "diozi/pell.hpp"
#include "diozi/pipeline.hpp"
#include "diozi/poly.hpp"
#include "diozi/quadint.hpp"
#include "diozi/suites.hpp"

namespace py = pybind11;
using namespace diozi;

namespace {

py::int_ to_py(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

BigInt to_big(py::handle h) { return BigInt(py::str(h).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "reduction compiler and verification lab for diophantine equations over Z[i]";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);
  py::register_exception<NoAdmissibleT>(m, "NoAdmissibleT", PyExc_RuntimeError);

  m.def(
      "pell_pairs",
      [](std::size_t count) {
        py::list out;
        for (const PellPair& p : pell_pairs(count)) {
          out.append(py::make_tuple(p.index, to_py(p.x), to_py(p.y)));
        }
        return out;
      },
      py::arg("count"), "First pairs of X^2 - 3Y^2 = 1, as (index, X, Y).");

  m.def(
      "pell_is_y",
      [](py::int_ y) -> py::object {
        auto x = pell_is_y(to_big(y));
        if (!x) return py::none();
        return to_py(*x);
      },
      py::arg("y"), "X >= 0 with X^2 = 3Y^2 + 1, or None.");

  m.def(
      "is_square",
      [](std::int64_t d, const std::string& literal) -> py::object {
        QuadField field(d);
        auto root = square_root(parse_quad(field, literal));
        if (!root) return py::none();
        return py::str(root->str());
      },
      py::arg("d"), py::arg("literal"),
      "Square root in O_K of Q(sqrt(-d)) as a literal, or None.");

  m.def(
      "norm",
      [](std::int64_t d, const std::string& literal) {
        QuadField field(d);
        return to_py(parse_quad(field, literal).norm());
      },
      py::arg("d"), py::arg("literal"));

  m.def(
      "check_rational",
      [](std::int64_t d, const std::vector<std::string>& literals) {
        QuadField field(d);
        std::vector<QuadInt> xs;
        for (const std::string& lit : literals) xs.push_back(parse_quad(field, lit));
        QuadRat value = integrality_value(field, xs);
        return py::make_tuple(value.is_rational(), value.str());
      },
      py::arg("d"), py::arg("literals"),
      "Integrality criterion: (is_rational, exact value) for y + sum x_k/y^k.");

  m.def(
      "box",
      [](std::int64_t d, long bound) {
        std::vector<std::string> out;
        for (const QuadInt& x : box(QuadField(d), bound)) out.push_back(x.str());
        return out;
      },
      py::arg("d"), py::arg("bound"));

  m.def(
      "canon_poly",
      [](const std::string& text) { return parse_poly(text).emit(); }, py::arg("text"),
      "Canonical form of a polynomial in the project grammar.");

  m.def(
      "flatten",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (const SparsePoly& q : skolem_flatten(parse_poly(text))) out.push_back(q.emit());
        return out;
      },
      py::arg("text"), "Equisolvable degree-<=2 system for the given polynomial.");

  m.def(
      "reduce_poly",
      [](const std::string& text, unsigned n, py::int_ a, const std::string& encoding) {
        ReductionConfig cfg{n, parse_encoding(encoding)};
        Reduction red = reduce(parse_poly(text), to_big(a), cfg);
        py::dict out;
        out["circuit"] = red.circuit.emit();
        out["unknowns"] = red.unknowns;
        out["parameter"] = red.parameter;
        out["parameter_value"] = to_py(red.parameter_value);
        out["degree_bound"] = to_py(degree_bound(red.circuit));
        out["nodes"] = red.circuit.nodes().size();
        return out;
      },
      py::arg("text"), py::arg("n"), py::arg("a"), py::arg("encoding") = "repaired",
      "Compile P(z0..zn) = 0 over Z into a circuit F over the Gaussian integers.");

  m.def(
      "lift",
      [](const std::string& text, unsigned n, py::int_ a, const std::vector<py::int_>& zs,
         const std::string& encoding, std::size_t budget) {
        ReductionConfig cfg{n, parse_encoding(encoding)};
        std::vector<BigInt> values;
        for (const py::int_& z : zs) values.push_back(to_big(z));
        return lift_witness(parse_poly(text), to_big(a), values, cfg, budget).emit();
      },
      py::arg("text"), py::arg("n"), py::arg("a"), py::arg("zs"),
      py::arg("encoding") = "repaired", py::arg("budget") = 100000,
      "Lift a Z-witness of P to a verified bundle, returned in file format.");

  m.def(
      "verify",
      [](const std::string& circuit_text, const std::string& bundle_text) {
        return verify_bundle(Circuit::parse(circuit_text), WitnessBundle::parse(bundle_text));
      },
      py::arg("circuit"), py::arg("bundle"));

  m.def(
      "integer_witness",
      [](py::int_ t, std::size_t budget) {
        IntegralitySearch s = integrality_witness(to_big(t), budget);
        if (s.status == SearchStatus::budget_exceeded) throw BudgetExceeded(s.note);
        if (s.status == SearchStatus::exhausted_period) throw SearchExhausted(s.note);
        py::dict out;
        out["v"] = to_py(s.witness->v);
        out["x"] = to_py(s.witness->x);
        out["y"] = to_py(s.witness->y);
        out["square"] = to_py(s.witness->square_x);
        out["pell_indices"] = py::make_tuple(s.witness->pell_index_vy, s.witness->pell_index_x);
        return out;
      },
      py::arg("t"), py::arg("budget") = 100000,
      "Integer witness (v, x, y) for the Pell-backed integrality gadget at t.");

  m.def(
      "run_suite",
      [](const std::string& name, const std::vector<std::int64_t>& d, long box, unsigned n,
         std::int64_t t_lo, std::int64_t t_hi, std::size_t budget, std::uint64_t seed,
         unsigned threads) {
        SuiteParams params;
        if (!d.empty()) params.ds = d;
        params.box = box;
        params.n = n;
        params.t_lo = t_lo;
        params.t_hi = t_hi;
        params.budget = budget;
        params.seed = seed;
        params.threads = threads;
        SuiteReport report = run_suite(name, params);
        return py::make_tuple(report.violations, report.text());
      },
      py::arg("name"), py::arg("d") = std::vector<std::int64_t>{}, py::arg("box") = 0,
      py::arg("n") = 2, py::arg("t_lo") = 0, py::arg("t_hi") = 3, py::arg("budget") = 100000,
      py::arg("seed") = 1, py::arg("threads") = 1,
      "Run a property suite; returns (violations, report text).");

  m.attr("suite_names") = suite_names();
}
