#include "squarepairs/parametrization.hpp"

#include <ostream>

namespace squarepairs {

std::ostream& operator<<(std::ostream& os, const ParamTriple& t) {
  return os << "(" << t.p << "," << t.q << "," << t.r << ")";
}

const char* to_string(RejectionReason r) {
  switch (r) {
    case RejectionReason::kZeroTriple: return "ZeroTriple";
    case RejectionReason::kTrivialCondition: return "TrivialCondition";
    case RejectionReason::kANotInvertible: return "ANotInvertible";
    case RejectionReason::kNotASquare: return "NotASquare";
    case RejectionReason::kDegenerateSide: return "DegenerateSide";
    case RejectionReason::kTriangleInequalityFails: return "TriangleInequalityFails";
    case RejectionReason::kCongruentTriangles: return "CongruentTriangles";
  }
  return "?";
}

Sextuple substitute(const Rational& p, const Rational& q, const Rational& r,
                    const Rational& u) {
  Sextuple s;
  s.a = p * u + q + r;
  s.b = q * u - p - r;
  s.c = r * u - p + q;
  s.d = p * u - q - r;
  s.e = q * u + p + r;
  s.f = r * u + p - q;
  return s;
}

Rational factor_a(const Rational& p, const Rational& q, const Rational& r) {
  // p^3 + p^2 q - p^2 r + p q^2 - 2 p q r + p r^2 + q^3 - q^2 r + q r^2 - r^3
  Rational p2 = p * p, q2 = q * q, r2 = r * r;
  return p2 * p + p2 * q - p2 * r + p * q2 - 2 * (p * q * r) + p * r2 + q2 * q -
         q2 * r + q * r2 - r2 * r;
}

Rational factor_b(const Rational& p, const Rational& q, const Rational& r) {
  // 2 p^2 q - 2 p^2 r + 2 p q^2 + 12 p q r + 2 p r^2 - 2 q^2 r + 2 q r^2
  Rational p2 = p * p, q2 = q * q, r2 = r * r;
  return 2 * (p2 * q - p2 * r + p * q2 + p * r2 - q2 * r + q * r2) + 12 * (p * q * r);
}

bool is_trivial(const Rational& p, const Rational& q, const Rational& r,
                const Rational& u) {
  if (u.is_zero() || u == Rational(1) || u == Rational(-1)) return true;
  return (q + r).is_zero() || (p + r).is_zero() || (p - q).is_zero() ||
         (p + q - r).is_zero();
}

std::optional<USolution> solve_u(const Rational& p, const Rational& q,
                                 const Rational& r, SolveUStatus* status) {
  const auto report = [&](SolveUStatus s) {
    if (status) *status = s;
  };
  Rational a = factor_a(p, q, r);
  if (a.is_zero()) {
    report(factor_b(p, q, r).is_zero() ? SolveUStatus::kResidualVanishesIdentically
                                       : SolveUStatus::kANotInvertible);
    return std::nullopt;
  }
  std::optional<Rational> t = rational_square_root(-(a * factor_b(p, q, r)));
  if (!t) {
    report(SolveUStatus::kNotASquare);
    return std::nullopt;
  }
  report(SolveUStatus::kSolved);
  return USolution{*t, -(*t) / a};
}

PipelineResult pair_from_pqr(const Rational& p, const Rational& q, const Rational& r) {
  if (p.is_zero() && q.is_zero() && r.is_zero()) {
    return Rejection{RejectionReason::kZeroTriple};
  }
  SolveUStatus status = SolveUStatus::kSolved;
  std::optional<USolution> sol = solve_u(p, q, r, &status);
  if (!sol) {
    switch (status) {
      case SolveUStatus::kANotInvertible:
        return Rejection{RejectionReason::kANotInvertible, false};
      case SolveUStatus::kResidualVanishesIdentically:
        return Rejection{RejectionReason::kANotInvertible, true};
      default:
        return Rejection{RejectionReason::kNotASquare};
    }
  }
  if (is_trivial(p, q, r, sol->u)) {
    return Rejection{RejectionReason::kTrivialCondition};
  }
  CanonFailure why = CanonFailure::kZeroRootSide;
  std::optional<TrianglePair> pair = canonicalize(substitute(p, q, r, sol->u), &why);
  if (!pair) {
    switch (why) {
      case CanonFailure::kZeroRootSide:
        return Rejection{RejectionReason::kDegenerateSide};
      case CanonFailure::kNotATriangle:
        return Rejection{RejectionReason::kTriangleInequalityFails};
      case CanonFailure::kCongruent:
        return Rejection{RejectionReason::kCongruentTriangles};
      default:
        // The substitution guarantees equal perimeters and Heron products.
        throw std::logic_error("pair_from_pqr: substitution invariant violated");
    }
  }
  return ParamSolution{ParamTriple{p, q, r}, sol->t, sol->u, *pair};
}

}  // namespace squarepairs
