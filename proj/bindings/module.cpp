#include "squarepairs/serialize.hpp"

#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;
namespace sp = squarepairs;

namespace {

// Scalars cross the boundary as python ints or "num/den" strings; results
// come back as strings (exactness is never at the mercy of a double).
sp::Rational parse_scalar(py::handle h) {
  const std::string s = py::str(h).cast<std::string>();
  return sp::Rational::parse(s);
}

sp::Integer parse_integer(py::handle h) {
  return sp::Integer(py::str(h).cast<std::string>());
}

py::object big_int(const sp::Integer& n) {
  return py::module_::import("builtins").attr("int")(n.get_str());
}

py::object json_to_py(const sp::Json& j) {
  return py::module_::import("json").attr("loads")(sp::dump(j));
}

sp::CurvePoint parse_point(py::handle h) {
  if (h.is_none()) return sp::CurvePoint::infinity();
  py::tuple t = py::cast<py::tuple>(h);
  return sp::CurvePoint::affine(parse_scalar(t[0]), parse_scalar(t[1]));
}

py::object point_to_py(const sp::CurvePoint& pt) {
  if (pt.at_infinity) return py::none();
  return py::make_tuple(pt.X.str(), pt.Y.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic core for perfect-square-sided triangle pairs";

  m.def(
      "isqrt", [](py::int_ n) { return big_int(sp::isqrt(parse_integer(n))); },
      py::arg("n"), "Floor square root of a nonnegative integer.");

  m.def(
      "perfect_square_root",
      [](py::int_ n) -> py::object {
        const auto r = sp::perfect_square_root(parse_integer(n));
        return r ? big_int(*r) : py::none().cast<py::object>();
      },
      py::arg("n"), "Exact square root, or None when n is not a perfect square.");

  m.def(
      "rational_square_root",
      [](py::object q) -> py::object {
        const auto r = sp::rational_square_root(parse_scalar(q));
        return r ? py::cast(r->str()) : py::none().cast<py::object>();
      },
      py::arg("q"), "Nonnegative rational square root, or None.");

  m.def(
      "factor_a",
      [](py::object p, py::object q, py::object r) {
        return sp::factor_a(parse_scalar(p), parse_scalar(q), parse_scalar(r)).str();
      },
      py::arg("p"), py::arg("q"), py::arg("r"),
      "Leading coefficient A of the area residual A*u^2 + B.");

  m.def(
      "factor_b",
      [](py::object p, py::object q, py::object r) {
        return sp::factor_b(parse_scalar(p), parse_scalar(q), parse_scalar(r)).str();
      },
      py::arg("p"), py::arg("q"), py::arg("r"),
      "Constant coefficient B of the area residual A*u^2 + B.");

  m.def(
      "substitute",
      [](py::object p, py::object q, py::object r, py::object u) {
        const sp::Sextuple s =
            sp::substitute(parse_scalar(p), parse_scalar(q), parse_scalar(r),
                           parse_scalar(u));
        py::list out;
        for (const sp::Rational& v : s.to_array()) out.append(v.str());
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("u"),
      "Root sides (a, b, c, d, e, f) for the given parameters.");

  m.def(
      "is_trivial",
      [](py::object p, py::object q, py::object r, py::object u) {
        return sp::is_trivial(parse_scalar(p), parse_scalar(q), parse_scalar(r),
                              parse_scalar(u));
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("u"),
      "Whether (p, q, r, u) lies on the degenerate locus.");

  m.def(
      "solve_u",
      [](py::object p, py::object q, py::object r) -> py::object {
        const auto sol = sp::solve_u(parse_scalar(p), parse_scalar(q), parse_scalar(r));
        if (!sol) return py::none();
        return py::make_tuple(sol->t.str(), sol->u.str());
      },
      py::arg("p"), py::arg("q"), py::arg("r"),
      "Solves A*u^2 + B = 0: returns (t, u) with t = sqrt(-A*B), or None.");

  m.def(
      "pair_from_pqr",
      [](py::object p, py::object q, py::object r) {
        sp::PipelineResult res =
            sp::pair_from_pqr(parse_scalar(p), parse_scalar(q), parse_scalar(r));
        if (const sp::ParamSolution* sol = std::get_if<sp::ParamSolution>(&res)) {
          return json_to_py(sp::wrap("param_solution", sp::to_json(*sol)));
        }
        return json_to_py(
            sp::wrap("rejection", sp::to_json(std::get<sp::Rejection>(res))));
      },
      py::arg("p"), py::arg("q"), py::arg("r"),
      "Full pipeline from a parameter triple; returns a solution or rejection dict.");

  m.def(
      "quartic_coeffs",
      [](py::object m_) {
        const sp::QuarticCoeffs qc = sp::quartic_coeffs(parse_scalar(m_));
        py::dict d;
        d["m"] = qc.m.str();
        d["c4"] = qc.c4.str();
        d["c3"] = qc.c3.str();
        d["c2"] = qc.c2.str();
        d["c1"] = qc.c1.str();
        d["c0"] = qc.c0.str();
        return d;
      },
      py::arg("m"), "Quartic family coefficients at parameter m.");

  m.def(
      "on_quartic",
      [](py::object x, py::object y, py::object m_) {
        return sp::on_quartic(sp::QuarticPoint{parse_scalar(x), parse_scalar(y)},
                              sp::quartic_coeffs(parse_scalar(m_)));
      },
      py::arg("x"), py::arg("y"), py::arg("m") = "13/25",
      "Whether (x, y) satisfies the quartic at parameter m.");

  m.def(
      "on_curve",
      [](py::object pt) {
        return sp::on_curve(parse_point(pt), sp::curve_constants().curve);
      },
      py::arg("pt"),
      "Whether the point (an (X, Y) tuple, None for infinity) is on the curve.");

  m.def(
      "ec_neg", [](py::object pt) { return point_to_py(sp::ec_neg(parse_point(pt))); },
      py::arg("pt"));

  m.def(
      "ec_add",
      [](py::object a, py::object b) {
        return point_to_py(
            sp::ec_add(parse_point(a), parse_point(b), sp::curve_constants().curve));
      },
      py::arg("a"), py::arg("b"), "Chord-tangent sum of two curve points.");

  m.def(
      "ec_mul",
      [](py::int_ k, py::object pt) {
        return point_to_py(
            sp::ec_mul(parse_integer(k), parse_point(pt), sp::curve_constants().curve));
      },
      py::arg("k"), py::arg("pt"), "Scalar multiple of a curve point.");

  m.def(
      "to_weierstrass",
      [](py::object x, py::object y) {
        return point_to_py(
            sp::to_weierstrass(sp::QuarticPoint{parse_scalar(x), parse_scalar(y)}));
      },
      py::arg("x"), py::arg("y"), "Quartic point to Weierstrass point.");

  m.def(
      "to_quartic",
      [](py::object pt) {
        const sp::QuarticPoint q = sp::to_quartic(parse_point(pt));
        return py::make_tuple(q.x.str(), q.y.str());
      },
      py::arg("pt"), "Weierstrass point back to the quartic.");

  m.def(
      "search",
      [](std::int64_t bound, int workers) {
        return json_to_py(sp::wrap("search_report", sp::to_json(sp::search(bound, workers))));
      },
      py::arg("bound"), py::arg("workers") = 0,
      "Exhaustive canonical-triple scan; returns the report as a dict.");

  m.def(
      "generate_pairs",
      [](long k_bound, long j_bound) {
        return json_to_py(sp::wrap("generation_report",
                                   sp::to_json(sp::generate_pairs(k_bound, j_bound))));
      },
      py::arg("k_bound"), py::arg("j_bound"),
      "Lattice walk P + k*G1 + j*G2; returns the report as a dict.");

  m.def("verify", [] {
    return json_to_py(
        sp::wrap("verification_report", sp::to_json(sp::run_verification())));
  });

  m.attr("__version__") = "0.1.0";
}
