#pragma once

#include "squarepairs/triangle.hpp"

#include <iosfwd>
#include <optional>
#include <variant>

namespace squarepairs {

// Parameters of the root-side substitution
//   a = p*u + q + r,  b = q*u - p - r,  c = r*u - p + q,
//   d = p*u - q - r,  e = q*u + p + r,  f = r*u + p - q,
// which satisfies a^2+b^2+c^2 = d^2+e^2+f^2 identically in (p, q, r, u).
struct ParamTriple {
  Rational p, q, r;

  friend bool operator==(const ParamTriple& a, const ParamTriple& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r;
  }
  friend bool operator!=(const ParamTriple& a, const ParamTriple& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const ParamTriple& t);
};

enum class RejectionReason {
  kZeroTriple,
  kTrivialCondition,
  kANotInvertible,
  kNotASquare,
  kDegenerateSide,
  kTriangleInequalityFails,
  kCongruentTriangles,
};
const char* to_string(RejectionReason r);

Sextuple substitute(const Rational& p, const Rational& q, const Rational& r,
                    const Rational& u);

// Coefficients of the residual of the equal-area condition after the
// substitution: the difference of the two Heron products factors as
//   16 u (u-1) (u+1) (q+r) (p+r) (p-q)
//     * ((p^2+q^2+r^2) u^2 + 2 (p^2+q^2+r^2-pq+pr+qr)) * (A u^2 + B).
// The quadratic factor on the second line is strictly positive off the
// trivial locus, so equal areas reduce to A u^2 + B = 0.
Rational factor_a(const Rational& p, const Rational& q, const Rational& r);
Rational factor_b(const Rational& p, const Rational& q, const Rational& r);

// The degenerate locus: u in {0, 1, -1} or one of the linear factors
// (q+r)(p+r)(p-q)(p+q-r) vanishing. On it the substitution collapses to
// congruent or mirrored triangles.
bool is_trivial(const Rational& p, const Rational& q, const Rational& r,
                const Rational& u);

enum class SolveUStatus {
  kSolved,
  kANotInvertible,                // A == 0, B != 0: no residual root exists
  kResidualVanishesIdentically,   // A == 0, B == 0: every u is a root
  kNotASquare,                    // -A*B is not a rational square
};

struct USolution {
  Rational t;  // nonnegative, t^2 == -A*B
  Rational u;  // -t/A
};

// Solves A u^2 + B = 0 for rational u via t = sqrt(-A*B), u = -t/A. Absent
// unless A != 0 and -A*B is a square in Q.
std::optional<USolution> solve_u(const Rational& p, const Rational& q,
                                 const Rational& r,
                                 SolveUStatus* status = nullptr);

struct Rejection {
  RejectionReason reason;
  // A == 0 and B == 0: the residual vanishes for every u. Flagged so callers
  // can surface these triples separately.
  bool residual_vanishes_identically = false;
};

struct ParamSolution {
  ParamTriple triple;
  Rational t;
  Rational u;
  TrianglePair pair;
};

using PipelineResult = std::variant<ParamSolution, Rejection>;

// Full pipeline from a parameter triple to a canonical pair. Every failure
// mode maps to a RejectionReason; (0,0,0) is reported as ZeroTriple without
// touching the algebra.
PipelineResult pair_from_pqr(const Rational& p, const Rational& q, const Rational& r);

}  // namespace squarepairs
