#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supercong/combinatorics.hpp"
#include "supercong/congruences.hpp"
#include "supercong/exact_arith.hpp"
#include "supercong/hypergeometric.hpp"
#include "supercong/report.hpp"

namespace py = pybind11;
using namespace supercong;

namespace {

py::object to_int(const Integer& n) { return py::module_::import("builtins").attr("int")(n.get_str()); }

py::object to_fraction(const Rational& x) {
  return py::module_::import("fractions").attr("Fraction")(to_int(x.get_num()), to_int(x.get_den()));
}

// Accepts int, fractions.Fraction or a "p/q" string.
Rational from_py(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj)) return Rational(Integer(py::str(obj).cast<std::string>()));
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return make_rational(Integer(py::str(obj.attr("numerator")).cast<std::string>()),
                         Integer(py::str(obj.attr("denominator")).cast<std::string>()));
  }
  throw py::type_error("expected int, Fraction or 'p/q' string");
}

std::vector<Rational> from_py_list(const py::iterable& xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(from_py(x));
  return out;
}

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic behind the supercong checker";
  m.attr("__version__") = kVersion;

  py::register_exception<NonIntegralAtP>(m, "NonIntegralAtP", PyExc_ValueError);
  py::register_exception<SkippedPole>(m, "SkippedPole", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def(
      "padic_valuation",
      [](const py::object& x, Prime p) -> py::object {
        const Valuation v = padic_valuation(from_py(x), p);
        if (v.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
        return py::int_(v.value());
      },
      py::arg("x"), py::arg("p"), "v_p(x); float('inf') for x = 0");
  m.def(
      "reduce_mod",
      [](const py::object& x, Prime p, unsigned k) { return to_int(reduce_mod(from_py(x), PrimePower(p, k)).value()); },
      py::arg("x"), py::arg("p"), py::arg("k"), "Residue of a p-integral rational modulo p^k");
  m.def(
      "legendre_symbol", [](const py::object& a, Prime p) { return legendre_symbol(from_py(a).get_num(), p); },
      py::arg("a"), py::arg("p"));

  m.def(
      "binomial", [](std::uint64_t n, std::int64_t k) { return to_int(binomial(n, k)); }, py::arg("n"), py::arg("k"));
  m.def(
      "pochhammer", [](const py::object& x, std::uint64_t k) { return to_fraction(pochhammer(from_py(x), k)); },
      py::arg("x"), py::arg("k"));
  m.def(
      "harmonic", [](std::uint64_t k, unsigned r) { return to_fraction(harmonic(k, r)); }, py::arg("k"),
      py::arg("r") = 1);
  m.def(
      "euler_number", [](std::uint64_t n) { return to_int(euler_number(n)); }, py::arg("n"));
  m.def(
      "fermat_quotient2", [](Prime p) { return to_fraction(fermat_quotient2(p)); }, py::arg("p"));
  m.def(
      "main_sum", [](Prime p) { return to_fraction(main_sum(p)); }, py::arg("p"));

  m.def(
      "eval_terminating_pfq",
      [](const py::iterable& upper, const py::iterable& lower, const py::object& z) {
        HyperSeries s;
        s.upper = from_py_list(upper);
        s.lower = from_py_list(lower);
        s.argument = from_py(z);
        return to_fraction(eval_terminating_pfq(s));
      },
      py::arg("upper"), py::arg("lower"), py::arg("z") = py::int_(1));

  m.def(
      "run",
      [](std::vector<std::string> suites, std::vector<std::string> checks, std::uint64_t prime_min,
         std::uint64_t prime_max, std::uint64_t max_n, std::uint64_t seed, unsigned jobs, bool include_p3,
         bool verbose) {
        RunConfig c;
        c.identities = c.congruences = false;
        for (const auto& s : suites) {
          if (s == "identities") c.identities = true;
          else if (s == "congruences") c.congruences = true;
          else throw ConfigError("unknown suite '" + s + "'");
        }
        c.checks = std::move(checks);
        c.prime_min = prime_min;
        c.prime_max = prime_max;
        c.max_n = max_n;
        c.seed = seed;
        c.jobs = jobs;
        c.include_p3 = include_p3;
        c.verbose = verbose;
        std::string out;
        {
          py::gil_scoped_release release;
          out = render_json(run(c));
        }
        return json_loads(out);
      },
      py::kw_only(), py::arg("suites") = std::vector<std::string>{"identities", "congruences"},
      py::arg("checks") = std::vector<std::string>{}, py::arg("prime_min") = 5, py::arg("prime_max") = 199,
      py::arg("max_n") = 200, py::arg("seed") = 0x5EED, py::arg("jobs") = 1, py::arg("include_p3") = false,
      py::arg("verbose") = false, "Run the checker and return the JSON report as a dict");
  m.def("list_checks", [] { return json_loads(list_checks_json().dump()); });
}
