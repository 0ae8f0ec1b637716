#pragma once

#include "squarepairs/parametrization.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace squarepairs {

// One-parameter quartic family y^2 = c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0
// obtained from the square condition t^2 = -A*B under q = -p(1-m*x), r = p*x,
// t = p^3 x y. The coefficients are polynomials in m:
//   c4 = 2 (m-1)^2 (m^2+1) m
//   c3 = -2 m (m-1) (m^3 + 10 m^2 + m + 8)
//   c2 = 6 m^4 + 50 m^3 - 18 m^2 + 14 m - 16
//   c1 = -8 m^2 (m+8)
//   c0 = 4 m (m+8)
struct QuarticCoeffs {
  Rational m, c4, c3, c2, c1, c0;
};

QuarticCoeffs quartic_coeffs(const Rational& m);

struct QuarticPoint {
  Rational x, y;

  friend bool operator==(const QuarticPoint& a, const QuarticPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const QuarticPoint& a, const QuarticPoint& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const QuarticPoint& p);
};

bool on_quartic(const QuarticPoint& pt, const QuarticCoeffs& qc);

// Short Weierstrass model Y^2 = X^3 + a4 X + a6 over Q.
struct WeierstrassCurve {
  Integer a4, a6;

  Integer discriminant() const;  // -16 (4 a4^3 + 27 a6^2)
};

// Affine rational point or the point at infinity (the group identity).
struct CurvePoint {
  bool at_infinity = true;
  Rational X, Y;

  static CurvePoint infinity() { return CurvePoint{}; }
  static CurvePoint affine(Rational x, Rational y) {
    return CurvePoint{false, std::move(x), std::move(y)};
  }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    return a.X == b.X && a.Y == b.Y;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const CurvePoint& p);
};

bool on_curve(const CurvePoint& pt, const WeierstrassCurve& c);

// Chord-tangent group law. Inputs must lie on c; closure under the law is
// exact.
CurvePoint ec_neg(const CurvePoint& pt);
CurvePoint ec_add(const CurvePoint& a, const CurvePoint& b, const WeierstrassCurve& c);
CurvePoint ec_mul(const Integer& k, const CurvePoint& pt, const WeierstrassCurve& c);

// Thrown by the birational maps on their exceptional loci (where a map
// denominator vanishes or the input is the point at infinity).
class ExceptionalLocusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Birational maps between the m = 13/25 quartic and the Weierstrass model
// Y^2 = X^3 - 21151030877616 X + 31685265497576201600. Exact inverses of
// each other away from the exceptional loci (x = 2825/577 on the quartic
// side; infinity and the vanishing denominator on the curve side).
CurvePoint to_weierstrass(const QuarticPoint& pt);
QuarticPoint to_quartic(const CurvePoint& pt);

struct PqrFromQuartic {
  ParamTriple triple;  // integral, with p = lcm(den(x), den(m*x)) > 0
  Rational t;          // p^3 * x * y, satisfies t^2 == -A*B
};

// Clears denominators in (p, q, r) = (p, -p(1-m*x), p*x) so the parameter
// triple is integral. Requires x != 0.
PqrFromQuartic pqr_from_quartic_point(const QuarticPoint& pt, const Rational& m);

// The published curve data: the Weierstrass model above, the image P of the
// known quartic point (-25/14, -339/245), and two independent generators
// G1, G2 used for the lattice walk.
struct CurveConstants {
  WeierstrassCurve curve;
  CurvePoint p;
  CurvePoint g1;
  CurvePoint g2;
  QuarticPoint quartic_point;
  Rational m;
};

const CurveConstants& curve_constants();

// Validates a constants block: points on the curve, nonzero discriminant,
// quartic point on the quartic, birational image of the quartic point equal
// to P up to Y-negation. Throws std::logic_error naming the first violation.
void self_check(const CurveConstants& consts);

// Per-lattice-point outcome of a generation walk.
struct LatticeOutcome {
  long k = 0, j = 0;
  enum class Kind { kPair, kInfinity, kExceptionalLocus, kZeroX, kRejected };
  Kind kind = Kind::kPair;
  std::optional<RejectionReason> rejection;  // set when kind == kRejected
};
const char* to_string(LatticeOutcome::Kind k);

struct GeneratedPair {
  long k = 0, j = 0;  // first lattice point producing this pair
  CurvePoint point;
  QuarticPoint quartic;
  ParamSolution solution;
};

struct GenerationReport {
  long k_bound = 0, j_bound = 0;
  // Deduplicated pairs in discovery order; distinct lattice points often map
  // to one pair (the walk meets each pair along with its Y-negated mirror).
  std::vector<GeneratedPair> pairs;
  std::vector<LatticeOutcome> outcomes;  // every lattice point, walk order
};

// Walks Q = P + k*G1 + j*G2 over |k| <= k_bound, |j| <= j_bound in expanding
// rings (by max(|k|, |j|), lexicographic within a ring), pulls each Q back to
// the quartic and runs the parameter pipeline. Performs self_check(consts)
// first.
GenerationReport generate_pairs(long k_bound, long j_bound,
                                const CurveConstants& consts = curve_constants());

}  // namespace squarepairs
