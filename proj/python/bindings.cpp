#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "rule150/analysis.hpp"
#include "rule150/checks.hpp"
#include "rule150/cli.hpp"
#include "rule150/counting.hpp"
#include "rule150/eca.hpp"
#include "rule150/fractal.hpp"
#include "rule150/singular.hpp"

namespace py = pybind11;
using namespace rule150;

namespace {

// GMP integers cross the boundary as decimal strings.
py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

Integer from_py(const py::int_& v) { return Integer(py::str(v).cast<std::string>()); }

Rational rational_of(const py::handle& x) {
  if (py::isinstance<py::str>(x)) {
    const auto p = cli::parse_point(x.cast<std::string>());
    if (const auto* r = std::get_if<Rational>(&p)) return *r;
    throw py::value_error("expected a rational point");
  }
  Rational r(from_py(x.attr("numerator")), from_py(x.attr("denominator")));
  r.canonicalize();
  return r;
}

Dyadic dyadic_of_py(const py::handle& x) {
  const auto d = Dyadic::from_rational(rational_of(x));
  if (!d) throw py::value_error("not a dyadic rational in [0, 1]");
  return *d;
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_py(r.get_num()), to_py(r.get_den()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rule 150 counts and its singular function, in exact arithmetic";

  py::class_<QSqrt5>(m, "QSqrt5", "(p + q sqrt5) / d in lowest terms")
      .def(py::init([](const py::int_& p, const py::int_& q, const py::int_& d) {
             return QSqrt5(from_py(p), from_py(q), from_py(d));
           }),
           py::arg("p"), py::arg("q") = 0, py::arg("d") = 1)
      .def_static("alpha", &QSqrt5::alpha)
      .def_property_readonly("p", [](const QSqrt5& v) { return to_py(v.p()); })
      .def_property_readonly("q", [](const QSqrt5& v) { return to_py(v.q()); })
      .def_property_readonly("d", [](const QSqrt5& v) { return to_py(v.d()); })
      .def("decimal", &QSqrt5::to_decimal, py::arg("digits") = 12)
      .def("__float__", &QSqrt5::approx)
      .def("__repr__", [](const QSqrt5& v) {
        return "QSqrt5(" + v.p().get_str() + ", " + v.q().get_str() + ", " + v.d().get_str() + ")";
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self);

  m.def("simulate", [](std::size_t steps, int rule) {
        py::list rows;
        for (const auto& row : evolve(single_site_seed(), steps, rule)) {
          py::list ones;
          const auto cells = row.cells();
          for (std::size_t j = 0; j < cells.size(); ++j)
            if (cells[j]) ones.append(row.offset() + static_cast<std::int64_t>(j));
          rows.append(ones);
        }
        return rows;
      },
      py::arg("steps"), py::arg("rule") = 150, "Indices of live cells in rows 0..steps");

  m.def("num", [](const py::int_& n) { return to_py(num_matrix(from_py(n))); }, py::arg("n"));
  m.def("cum", [](const py::int_& n) { return to_py(cum_closed(from_py(n))); }, py::arg("n"));
  m.def("cum_pow2", [](unsigned long k) { return to_py(cum_pow2(k)); }, py::arg("k"));
  m.def("cum_pow2_closed", &cum_pow2_closed, py::arg("k"));

  m.def("F", [](const py::handle& x) { return eval_rational(rational_of(x)); }, py::arg("x"),
        "Exact value at a rational point; strings like '3/2^2' are accepted");
  m.def("F_recursive", [](const py::handle& x) { return eval_recursive_dyadic(dyadic_of_py(x)); },
        py::arg("x"));
  m.def("F_k", [](const py::handle& x, unsigned long k) { return fraction(eval_fk(dyadic_of_py(x), k)); },
        py::arg("x"), py::arg("k"));
  m.def("F_enclosure",
        [](const std::string& x, const std::string& eps) {
          const auto p = cli::parse_point(x);
          BitStream s;
          if (const auto* r = std::get_if<Rational>(&p)) {
            auto [head, period] = periodic_expansion(*r);
            s = BitStream::periodic(std::move(head), std::move(period));
          } else {
            s = std::get<BitStream>(p);
          }
          const auto e = eval_stream_enclosure(s, cli::parse_tolerance(eps));
          return py::make_tuple(e.lo, e.hi, e.depth);
        },
        py::arg("x"), py::arg("eps") = "1e-12");

  m.def("left_quotient", [](const py::handle& x, unsigned long m) { return left_quotient(dyadic_of_py(x), m); },
        py::arg("x"), py::arg("m"));
  m.def("right_quotient", [](const py::handle& x, unsigned long m) { return right_quotient(dyadic_of_py(x), m); },
        py::arg("x"), py::arg("m"));
  m.def("derivative_zero_sample",
        [](std::uint64_t seed, std::size_t count, unsigned long k) {
          const auto s = derivative_zero_sample(seed, count, k);
          return py::make_tuple(s.below, s.count);
        },
        py::arg("seed"), py::arg("count") = 200, py::arg("k") = 300);

  m.def("prefractal_pbm", [](unsigned k) { return prefractal(k).to_pbm_ascii(); }, py::arg("k"));
  m.def("boxcount_slope", &boxcount_slope, py::arg("jmin") = 8, py::arg("jmax") = 24);
  m.def("dimension", &limit_set_dimension);

  m.def("check", [](const std::string& suite) {
        const auto r = run_suite(suite);
        return py::make_tuple(r.passed(), r.failed());
      },
      py::arg("suite") = "all", "(passed, failed) for an invariant suite");
}
