#include "squarepairs/curve.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>

namespace squarepairs {

std::ostream& operator<<(std::ostream& os, const QuarticPoint& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

std::ostream& operator<<(std::ostream& os, const CurvePoint& p) {
  if (p.at_infinity) return os << "infinity";
  return os << "(" << p.X << ", " << p.Y << ")";
}

QuarticCoeffs quartic_coeffs(const Rational& m) {
  Rational m2 = m * m;
  Rational mm1 = m - 1;
  QuarticCoeffs qc;
  qc.m = m;
  qc.c4 = 2 * mm1 * mm1 * (m2 + 1) * m;
  qc.c3 = -2 * m * mm1 * (m2 * m + 10 * m2 + m + 8);
  qc.c2 = 6 * m2 * m2 + 50 * m2 * m - 18 * m2 + 14 * m - 16;
  qc.c1 = -8 * m2 * (m + 8);
  qc.c0 = 4 * m * (m + 8);
  return qc;
}

bool on_quartic(const QuarticPoint& pt, const QuarticCoeffs& qc) {
  const Rational& x = pt.x;
  Rational rhs = (((qc.c4 * x + qc.c3) * x + qc.c2) * x + qc.c1) * x + qc.c0;
  return pt.y * pt.y == rhs;
}

Integer WeierstrassCurve::discriminant() const {
  return -16 * (4 * a4 * a4 * a4 + 27 * a6 * a6);
}

bool on_curve(const CurvePoint& pt, const WeierstrassCurve& c) {
  if (pt.at_infinity) return true;
  const Rational& x = pt.X;
  return pt.Y * pt.Y == x * x * x + Rational(c.a4) * x + Rational(c.a6);
}

CurvePoint ec_neg(const CurvePoint& pt) {
  if (pt.at_infinity) return pt;
  return CurvePoint::affine(pt.X, -pt.Y);
}

CurvePoint ec_add(const CurvePoint& a, const CurvePoint& b, const WeierstrassCurve& c) {
  if (a.at_infinity) return b;
  if (b.at_infinity) return a;
  Rational lambda;
  if (a.X == b.X) {
    // Vertical chord (or tangent at a 2-torsion point): sum is the identity.
    if ((a.Y + b.Y).is_zero()) return CurvePoint::infinity();
    lambda = (3 * a.X * a.X + Rational(c.a4)) / (2 * a.Y);
  } else {
    lambda = (b.Y - a.Y) / (b.X - a.X);
  }
  Rational x3 = lambda * lambda - a.X - b.X;
  Rational y3 = lambda * (a.X - x3) - a.Y;
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint ec_mul(const Integer& k, const CurvePoint& pt, const WeierstrassCurve& c) {
  if (sgn(k) == 0 || pt.at_infinity) return CurvePoint::infinity();
  if (sgn(k) < 0) {
    Integer mk = -k;
    return ec_mul(mk, ec_neg(pt), c);
  }
  CurvePoint acc = pt;
  const size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;) {
    acc = ec_add(acc, acc, c);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = ec_add(acc, pt, c);
  }
  return acc;
}

namespace {

// Fixed integer coefficients of the birational maps, as decimal literals.
Rational C(const char* digits) { return Rational(Integer(digits)); }

}  // namespace

CurvePoint to_weierstrass(const QuarticPoint& pt) {
  const Rational& x = pt.x;
  const Rational& y = pt.y;
  Rational d = C("577") * x - C("2825");
  if (d.is_zero()) {
    throw ExceptionalLocusError("to_weierstrass: denominator vanishes at x = 2825/577");
  }
  Rational X = C("4") *
               (C("1311254697763") * x * x + C("2523717076250") * x +
                C("1621155375000") * y - C("3370847328125")) /
               (d * d);
  Rational Y = C("60734016") *
               (C("223993723304") * x * x * x + C("1368674740750") * x * x +
                C("364901515625") * x * y - C("2217844262500") * x +
                C("133349609375") * y - C("372517031250")) /
               (d * d * d);
  return CurvePoint::affine(std::move(X), std::move(Y));
}

QuarticPoint to_quartic(const CurvePoint& pt) {
  if (pt.at_infinity) {
    throw ExceptionalLocusError("to_quartic: point at infinity");
  }
  const Rational& X = pt.X;
  const Rational& Y = pt.Y;
  Rational D = C("140122182") * X - C("23657") * Y - C("532179246194760");
  if (D.is_zero()) {
    throw ExceptionalLocusError("to_quartic: denominator vanishes");
  }
  Rational x = C("-25") * (C("2048250") * X + C("4633") * Y - C("1188723263160")) / D;
  Rational y = C("5061168") *
               (C("137842") * X * X * X - C("739070924100") * X * X -
                C("68921") * Y * Y - C("182461764476160") * Y +
                C("3026923795437314317841600")) /
               (C("25") * D * D);
  return QuarticPoint{std::move(x), std::move(y)};
}

PqrFromQuartic pqr_from_quartic_point(const QuarticPoint& pt, const Rational& m) {
  if (pt.x.is_zero()) {
    throw std::domain_error("pqr_from_quartic_point: x must be nonzero");
  }
  Integer scale;
  Rational mx = m * pt.x;
  mpz_lcm(scale.get_mpz_t(), pt.x.den().get_mpz_t(), mx.den().get_mpz_t());
  Rational p{scale};
  Rational q = p * mx - p;
  Rational r = p * pt.x;
  Rational t = p * p * p * pt.x * pt.y;
  if (!q.is_integer() || !r.is_integer()) {
    throw std::logic_error("pqr_from_quartic_point: denominators not cleared");
  }
  if (t * t != -(factor_a(p, q, r) * factor_b(p, q, r))) {
    throw std::logic_error("pqr_from_quartic_point: t^2 != -A*B");
  }
  return PqrFromQuartic{ParamTriple{std::move(p), std::move(q), std::move(r)},
                        std::move(t)};
}

const CurveConstants& curve_constants() {
  static const CurveConstants consts = [] {
    CurveConstants cc;
    cc.curve = WeierstrassCurve{Integer("-21151030877616"),
                                Integer("31685265497576201600")};
    cc.p = CurvePoint::affine(
        Rational(Integer("-7450305309428"), Integer("4661281")),
        Rational(Integer("-78862809542759294976"), Integer("10063705679")));
    cc.g1 = CurvePoint::affine(
        Rational(Integer("6008706700"), Integer("1681")),
        Rational(Integer("91230882238080"), Integer("68921")));
    cc.g2 = CurvePoint::affine(
        Rational(Integer("7840706250956"), Integer("1168561")),
        Rational(Integer("-17496345598032878080"), Integer("1263214441")));
    cc.quartic_point = QuarticPoint{Rational(Integer(-25), Integer(14)),
                                    Rational(Integer(-339), Integer(245))};
    cc.m = Rational(Integer(13), Integer(25));
    return cc;
  }();
  return consts;
}

void self_check(const CurveConstants& consts) {
  const auto fail = [](const char* what) {
    throw std::logic_error(std::string("curve self-check failed: ") + what);
  };
  if (sgn(consts.curve.discriminant()) == 0) fail("discriminant is zero");
  if (!on_curve(consts.p, consts.curve)) fail("P is not on the curve");
  if (!on_curve(consts.g1, consts.curve)) fail("G1 is not on the curve");
  if (!on_curve(consts.g2, consts.curve)) fail("G2 is not on the curve");
  if (!on_quartic(consts.quartic_point, quartic_coeffs(consts.m))) {
    fail("base point is not on the quartic");
  }
  CurvePoint image = to_weierstrass(consts.quartic_point);
  if (image != consts.p && image != ec_neg(consts.p)) {
    fail("quartic base point does not map to P");
  }
  if (to_quartic(consts.p) != consts.quartic_point) {
    fail("P does not map back to the quartic base point");
  }
}

const char* to_string(LatticeOutcome::Kind k) {
  switch (k) {
    case LatticeOutcome::Kind::kPair: return "Pair";
    case LatticeOutcome::Kind::kInfinity: return "Infinity";
    case LatticeOutcome::Kind::kExceptionalLocus: return "ExceptionalLocus";
    case LatticeOutcome::Kind::kZeroX: return "ZeroX";
    case LatticeOutcome::Kind::kRejected: return "Rejected";
  }
  return "?";
}

GenerationReport generate_pairs(long k_bound, long j_bound, const CurveConstants& consts) {
  if (k_bound < 0 || j_bound < 0) {
    throw std::invalid_argument("generate_pairs: bounds must be nonnegative");
  }
  self_check(consts);

  const WeierstrassCurve& curve = consts.curve;
  std::vector<CurvePoint> m1(static_cast<size_t>(k_bound) + 1);
  std::vector<CurvePoint> m2(static_cast<size_t>(j_bound) + 1);
  m1[0] = CurvePoint::infinity();
  m2[0] = CurvePoint::infinity();
  for (long k = 1; k <= k_bound; ++k) m1[k] = ec_add(m1[k - 1], consts.g1, curve);
  for (long j = 1; j <= j_bound; ++j) m2[j] = ec_add(m2[j - 1], consts.g2, curve);
  const auto multiple = [](const std::vector<CurvePoint>& m, long i) {
    return i >= 0 ? m[i] : ec_neg(m[-i]);
  };

  GenerationReport rep;
  rep.k_bound = k_bound;
  rep.j_bound = j_bound;
  std::map<TrianglePair, size_t> seen;

  const long ring_max = std::max(k_bound, j_bound);
  for (long ring = 0; ring <= ring_max; ++ring) {
    for (long k = -k_bound; k <= k_bound; ++k) {
      for (long j = -j_bound; j <= j_bound; ++j) {
        if (std::max(std::abs(k), std::abs(j)) != ring) continue;

        CurvePoint q_pt = ec_add(
            consts.p, ec_add(multiple(m1, k), multiple(m2, j), curve), curve);
        LatticeOutcome out;
        out.k = k;
        out.j = j;
        if (q_pt.at_infinity) {
          out.kind = LatticeOutcome::Kind::kInfinity;
          rep.outcomes.push_back(std::move(out));
          continue;
        }
        QuarticPoint qp;
        try {
          qp = to_quartic(q_pt);
        } catch (const ExceptionalLocusError&) {
          out.kind = LatticeOutcome::Kind::kExceptionalLocus;
          rep.outcomes.push_back(std::move(out));
          continue;
        }
        if (qp.x.is_zero()) {
          out.kind = LatticeOutcome::Kind::kZeroX;
          rep.outcomes.push_back(std::move(out));
          continue;
        }
        PqrFromQuartic pqr = pqr_from_quartic_point(qp, consts.m);
        PipelineResult res =
            pair_from_pqr(pqr.triple.p, pqr.triple.q, pqr.triple.r);
        if (const Rejection* rej = std::get_if<Rejection>(&res)) {
          out.kind = LatticeOutcome::Kind::kRejected;
          out.rejection = rej->reason;
          rep.outcomes.push_back(std::move(out));
          continue;
        }
        ParamSolution sol = std::get<ParamSolution>(std::move(res));
        out.kind = LatticeOutcome::Kind::kPair;
        rep.outcomes.push_back(std::move(out));
        if (seen.emplace(sol.pair, rep.pairs.size()).second) {
          rep.pairs.push_back(GeneratedPair{k, j, std::move(q_pt), std::move(qp),
                                            std::move(sol)});
        }
      }
    }
  }
  return rep;
}

}  // namespace squarepairs
