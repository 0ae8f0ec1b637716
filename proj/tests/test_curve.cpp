#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squarepairs/curve.hpp"

#include <random>

using namespace squarepairs;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

CurvePoint pt(const char* x, const char* y) {
  return CurvePoint::affine(rat(x), rat(y));
}

}  // namespace

TEST_CASE("quartic coefficients at the published parameter") {
  const QuarticCoeffs qc = quartic_coeffs(Rational(13, 25));
  CHECK(qc.c4 == rat("2972736/9765625"));
  CHECK(qc.c3 == rat("55402464/9765625"));
  CHECK(qc.c2 == rat("-2389884/390625"));
  CHECK(qc.c1 == rat("-287976/15625"));
  CHECK(qc.c0 == rat("11076/625"));
}

TEST_CASE("quartic coefficients at degenerate parameters") {
  const QuarticCoeffs at1 = quartic_coeffs(Rational(1));
  CHECK(at1.c4 == Rational(0));
  CHECK(at1.c3 == Rational(0));
  CHECK(at1.c2 == Rational(36));
  CHECK(at1.c1 == Rational(-72));
  CHECK(at1.c0 == Rational(36));
  const QuarticCoeffs at0 = quartic_coeffs(Rational(0));
  CHECK(at0.c4 == Rational(0));
  CHECK(at0.c3 == Rational(0));
  CHECK(at0.c2 == Rational(-16));
  CHECK(at0.c1 == Rational(0));
  CHECK(at0.c0 == Rational(0));
}

TEST_CASE("published points lie on their curves") {
  const CurveConstants& cc = curve_constants();
  CHECK(cc.curve.a4 == Integer("-21151030877616"));
  CHECK(cc.curve.a6 == Integer("31685265497576201600"));
  CHECK(cc.curve.discriminant() ==
        Integer("171875264738357288509401290038084940857344"));
  CHECK(on_curve(cc.p, cc.curve));
  CHECK(on_curve(cc.g1, cc.curve));
  CHECK(on_curve(cc.g2, cc.curve));
  CHECK(on_curve(CurvePoint::infinity(), cc.curve));
  CHECK(on_quartic(cc.quartic_point, quartic_coeffs(cc.m)));
  // The mirrored quartic point is on the quartic too.
  CHECK(on_quartic(QuarticPoint{rat("-25/14"), rat("339/245")},
                   quartic_coeffs(cc.m)));
  // Perturbed points are not.
  CHECK(!on_curve(CurvePoint::affine(cc.p.X + 1, cc.p.Y), cc.curve));
  CHECK(!on_quartic(QuarticPoint{rat("-25/14"), rat("340/245")},
                    quartic_coeffs(cc.m)));
}

TEST_CASE("group law identities") {
  const CurveConstants& cc = curve_constants();
  const WeierstrassCurve& c = cc.curve;
  CHECK(ec_add(cc.p, CurvePoint::infinity(), c) == cc.p);
  CHECK(ec_add(CurvePoint::infinity(), cc.p, c) == cc.p);
  CHECK(ec_add(cc.p, ec_neg(cc.p), c) == CurvePoint::infinity());
  CHECK(ec_neg(CurvePoint::infinity()) == CurvePoint::infinity());
  CHECK(ec_mul(Integer(0), cc.g1, c) == CurvePoint::infinity());
  CHECK(ec_mul(Integer(1), cc.g1, c) == cc.g1);
  CHECK(ec_mul(Integer(-1), cc.g1, c) == ec_neg(cc.g1));
}

TEST_CASE("group law against frozen multiples") {
  const CurveConstants& cc = curve_constants();
  const WeierstrassCurve& c = cc.curve;

  const CurvePoint two_g1 = ec_add(cc.g1, cc.g1, c);
  CHECK(two_g1 ==
        pt("2180993756683342952808842815244/62382072632497989549025",
           "-3194148025846287069410135911890710905204438528/"
           "15580798104047400466567015759692625"));
  CHECK(ec_mul(Integer(2), cc.g1, c) == two_g1);

  const CurvePoint g1_plus_g2 = ec_add(cc.g1, cc.g2, c);
  CHECK(g1_plus_g2 == pt("137887799137123595535837196/10492976750503612849",
                         "1528778053069591930440766927967511146880/"
                         "33989757481522221031336885993"));
}

TEST_CASE("group law properties") {
  const CurveConstants& cc = curve_constants();
  const WeierstrassCurve& c = cc.curve;

  // Commutativity and associativity on the published points.
  CHECK(ec_add(cc.g1, cc.g2, c) == ec_add(cc.g2, cc.g1, c));
  CHECK(ec_add(ec_add(cc.p, cc.g1, c), cc.g2, c) ==
        ec_add(cc.p, ec_add(cc.g1, cc.g2, c), c));

  // Closure and multiple consistency.
  CurvePoint acc = CurvePoint::infinity();
  for (int k = 1; k <= 6; ++k) {
    acc = ec_add(acc, cc.g1, c);
    REQUIRE(on_curve(acc, c));
    REQUIRE(acc == ec_mul(Integer(k), cc.g1, c));
  }
  CHECK(ec_mul(Integer(6), cc.g1, c) ==
        ec_add(ec_mul(Integer(2), cc.g1, c), ec_mul(Integer(4), cc.g1, c), c));
  CHECK(ec_add(ec_mul(Integer(3), cc.g1, c), ec_mul(Integer(-3), cc.g1, c), c) ==
        CurvePoint::infinity());
}

TEST_CASE("birational maps fix the published correspondence") {
  const CurveConstants& cc = curve_constants();
  CHECK(to_weierstrass(cc.quartic_point) == cc.p);
  const QuarticPoint back = to_quartic(cc.p);
  CHECK(back == cc.quartic_point);
  // The mirrored quartic point maps to a different small curve point, not -P.
  const CurvePoint mirrored = to_weierstrass(QuarticPoint{rat("-25/14"), rat("339/245")});
  CHECK(mirrored == pt("-391028", "-6316337664"));
  CHECK(on_curve(mirrored, cc.curve));
  CHECK(mirrored != cc.p);
  CHECK(mirrored != ec_neg(cc.p));
}

TEST_CASE("birational roundtrips on walked points") {
  const CurveConstants& cc = curve_constants();
  const WeierstrassCurve& c = cc.curve;
  for (long k = -2; k <= 2; ++k) {
    for (long j = -2; j <= 2; ++j) {
      const CurvePoint q = ec_add(
          cc.p, ec_add(ec_mul(Integer(k), cc.g1, c), ec_mul(Integer(j), cc.g2, c), c),
          c);
      REQUIRE(on_curve(q, c));
      if (q.at_infinity) continue;
      QuarticPoint qp;
      try {
        qp = to_quartic(q);
      } catch (const ExceptionalLocusError&) {
        continue;
      }
      REQUIRE(on_quartic(qp, quartic_coeffs(cc.m)));
      REQUIRE(to_weierstrass(qp) == q);
    }
  }
}

TEST_CASE("exceptional loci raise") {
  const CurveConstants& cc = curve_constants();
  CHECK_THROWS_AS(to_quartic(CurvePoint::infinity()), ExceptionalLocusError);
  // x = 2825/577 kills the forward map denominator regardless of y.
  CHECK_THROWS_AS(to_weierstrass(QuarticPoint{rat("2825/577"), Rational(0)}),
                  ExceptionalLocusError);
  // -G1 is the rational point on the inverse map's vanishing line.
  CHECK_THROWS_AS(to_quartic(ec_neg(cc.g1)), ExceptionalLocusError);
  // +G1 is fine.
  CHECK_NOTHROW(to_quartic(cc.g1));
}

TEST_CASE("pqr_from_quartic_point clears denominators at the base point") {
  const CurveConstants& cc = curve_constants();
  const PqrFromQuartic res = pqr_from_quartic_point(cc.quartic_point, cc.m);
  CHECK(res.triple.p == Rational(14));
  CHECK(res.triple.q == Rational(-27));
  CHECK(res.triple.r == Rational(-25));
  CHECK(res.t == Rational(6780));
  CHECK_THROWS_AS(pqr_from_quartic_point(QuarticPoint{Rational(0), Rational(1)}, cc.m),
                  std::domain_error);
}

TEST_CASE("self_check accepts the published constants and rejects corruption") {
  CHECK_NOTHROW(self_check(curve_constants()));

  CurveConstants bad = curve_constants();
  bad.curve.a6 += 1;
  CHECK_THROWS_AS(self_check(bad), std::logic_error);

  bad = curve_constants();
  bad.p.X += 1;
  CHECK_THROWS_AS(self_check(bad), std::logic_error);

  bad = curve_constants();
  bad.g2.Y = -bad.g2.Y + 1;
  CHECK_THROWS_AS(self_check(bad), std::logic_error);

  bad = curve_constants();
  bad.m = Rational(14, 25);
  CHECK_THROWS_AS(self_check(bad), std::logic_error);
}

TEST_CASE("generation at the origin reproduces the first published pair") {
  const GenerationReport rep = generate_pairs(0, 0);
  REQUIRE(rep.pairs.size() == 1);
  REQUIRE(rep.outcomes.size() == 1);
  CHECK(rep.outcomes[0].kind == LatticeOutcome::Kind::kPair);
  const ParamSolution& sol = rep.pairs[0].solution;
  CHECK(sol.triple == ParamTriple{Rational(14), Rational(-27), Rational(-25)});
  CHECK(sol.pair.roots1 == std::array<Integer, 3>{661, 1498, 1515});
  CHECK(sol.pair.roots2 == std::array<Integer, 3>{921, 1310, 1553});
}

TEST_CASE("generation walk over the first ring") {
  const GenerationReport rep = generate_pairs(1, 1);
  REQUIRE(rep.outcomes.size() == 9);
  // Walk order: origin first, then ring 1 lexicographically.
  const std::vector<std::tuple<long, long, LatticeOutcome::Kind>> expected = {
      {0, 0, LatticeOutcome::Kind::kPair},
      {-1, -1, LatticeOutcome::Kind::kRejected},
      {-1, 0, LatticeOutcome::Kind::kPair},
      {-1, 1, LatticeOutcome::Kind::kRejected},
      {0, -1, LatticeOutcome::Kind::kRejected},
      {0, 1, LatticeOutcome::Kind::kRejected},
      {1, -1, LatticeOutcome::Kind::kRejected},
      {1, 0, LatticeOutcome::Kind::kRejected},
      {1, 1, LatticeOutcome::Kind::kPair},
  };
  for (size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(rep.outcomes[i].k == std::get<0>(expected[i]));
    REQUIRE(rep.outcomes[i].j == std::get<1>(expected[i]));
    REQUIRE(rep.outcomes[i].kind == std::get<2>(expected[i]));
    if (rep.outcomes[i].kind == LatticeOutcome::Kind::kRejected) {
      REQUIRE(rep.outcomes[i].rejection ==
              RejectionReason::kTriangleInequalityFails);
    }
  }

  // (-1, 0) maps to the first pair again; (1, 1) is new with 69-digit roots.
  REQUIRE(rep.pairs.size() == 2);
  CHECK(rep.pairs[0].k == 0);
  CHECK(rep.pairs[0].j == 0);
  CHECK(rep.pairs[1].k == 1);
  CHECK(rep.pairs[1].j == 1);
  const TrianglePair& fresh = rep.pairs[1].solution.pair;
  CHECK(fresh.roots1 ==
        std::array<Integer, 3>{
            Integer("139103026758624524351136361446485174916405263544605811214366690119138"),
            Integer("528235752750877739542467283920200641605827343014431608305223339536713"),
            Integer("545395446312421042150406767757911305318108285235453240821504531111265")});
  CHECK(fresh.roots2 ==
        std::array<Integer, 3>{
            Integer("189852742090230191144336419742884509925875708783915242475594878446490"),
            Integer("511991641242074754645012993904330819369787260478841870996666150271237"),
            Integer("545581663012137118830273568363019490666976763497129669741613147024037")});
  CHECK(on_curve(rep.pairs[1].point, curve_constants().curve));
  CHECK(on_quartic(rep.pairs[1].quartic, quartic_coeffs(curve_constants().m)));
}

TEST_CASE("generation walk deduplicates mirrored lattice points") {
  const GenerationReport rep = generate_pairs(2, 2);
  REQUIRE(rep.outcomes.size() == 25);
  REQUIRE(rep.pairs.size() == 7);
  const std::vector<std::pair<long, long>> discovery = {
      {0, 0}, {1, 1}, {-2, 2}, {-1, -2}, {-1, 2}, {2, -1}, {2, 0}};
  for (size_t i = 0; i < discovery.size(); ++i) {
    REQUIRE(rep.pairs[i].k == discovery[i].first);
    REQUIRE(rep.pairs[i].j == discovery[i].second);
  }
  // Mirrored points reach existing pairs: 12 Pair outcomes, 7 distinct.
  size_t pair_outcomes = 0;
  for (const LatticeOutcome& o : rep.outcomes) {
    if (o.kind == LatticeOutcome::Kind::kPair) ++pair_outcomes;
  }
  CHECK(pair_outcomes == 12);
}

TEST_CASE("asymmetric bounds restrict the walk") {
  const GenerationReport rep = generate_pairs(1, 0);
  REQUIRE(rep.outcomes.size() == 3);
  CHECK(rep.pairs.size() == 1);  // (0,0) and its mirror (-1,0) only
  CHECK_THROWS_AS(generate_pairs(-1, 0), std::invalid_argument);
}

TEST_CASE("every generated pair is exactly validated") {
  const GenerationReport rep = generate_pairs(3, 3);
  REQUIRE(rep.pairs.size() == 11);
  for (const GeneratedPair& g : rep.pairs) {
    const TrianglePair& pair = g.solution.pair;
    const std::array<Integer, 3> s1 = pair.squared1();
    const std::array<Integer, 3> s2 = pair.squared2();
    REQUIRE(s1[0] + s1[1] + s1[2] == pair.perimeter);
    REQUIRE(s2[0] + s2[1] + s2[2] == pair.perimeter);
    REQUIRE(s1[0] + s1[1] > s1[2]);
    REQUIRE(s2[0] + s2[1] > s2[2]);
    REQUIRE(pair.roots1 != pair.roots2);
  }
}
