#include "squarepairs/verify.hpp"

#include <functional>
#include <sstream>
#include <utility>

namespace squarepairs {

bool VerifyReport::all_pass() const {
  for (const VerifyCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

using CheckBody = std::function<std::pair<bool, std::string>()>;

void add_check(VerifyReport& rep, const char* name, const CheckBody& body) {
  VerifyCheck c;
  c.name = name;
  try {
    std::pair<bool, std::string> r = body();
    c.pass = r.first;
    c.detail = std::move(r.second);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  rep.checks.push_back(std::move(c));
}

std::array<Integer, 3> int_array(const char* a, const char* b, const char* c) {
  return {Integer(a), Integer(b), Integer(c)};
}

struct ExpectedPair {
  const char* p;
  const char* q;
  const char* r;
  const char* a;
  const char* b;
  const char* t;
  const char* u;
  std::array<const char*, 3> roots1;
  std::array<const char*, 3> roots2;
  const char* perim;
  const char* heron;
};

std::pair<bool, std::string> check_pipeline(const ExpectedPair& exp) {
  const Rational p = Rational::parse(exp.p);
  const Rational q = Rational::parse(exp.q);
  const Rational r = Rational::parse(exp.r);
  std::ostringstream os;
  if (factor_a(p, q, r) != Rational::parse(exp.a)) return {false, "A mismatch"};
  if (factor_b(p, q, r) != Rational::parse(exp.b)) return {false, "B mismatch"};
  PipelineResult res = pair_from_pqr(p, q, r);
  const ParamSolution* sol = std::get_if<ParamSolution>(&res);
  if (sol == nullptr) {
    return {false, std::string("pipeline rejected the triple: ") +
                       to_string(std::get<Rejection>(res).reason)};
  }
  if (sol->t != Rational::parse(exp.t)) return {false, "t mismatch"};
  if (sol->u != Rational::parse(exp.u)) return {false, "u mismatch"};
  const TrianglePair& pair = sol->pair;
  if (pair.roots1 != int_array(exp.roots1[0], exp.roots1[1], exp.roots1[2]) ||
      pair.roots2 != int_array(exp.roots2[0], exp.roots2[1], exp.roots2[2])) {
    os << "root sides mismatch, got " << pair;
    return {false, os.str()};
  }
  if (pair.perimeter != Integer(exp.perim)) return {false, "perimeter mismatch"};
  if (pair.sixteen_area_sq != Integer(exp.heron)) return {false, "Heron product mismatch"};
  if (pair.area_is_integer) return {false, "area unexpectedly integral"};
  os << "(p,q,r)=(" << exp.p << "," << exp.q << "," << exp.r << ") gives roots "
     << pair << ", perimeter " << exp.perim << ", 16*Area^2 " << exp.heron;
  return {true, os.str()};
}

const ExpectedPair kFirstPair = {
    "14", "-27", "-25",
    "-300", "153228", "6780", "113/5",
    {"661", "1498", "1515"},
    {"921", "1310", "1553"},
    "4976150",
    "3843417313397722281480000",
};

const ExpectedPair kSecondPair = {
    "46", "73", "371",
    "-39053308", "42983388", "40971252", "1239/1181",
    {"67005", "81926", "96893"},
    {"71297", "77895", "97154"},
    "20589792950",
    "3106329618775492240017261074705366280000",
};

}  // namespace

VerifyReport run_verification(const CurveConstants& consts) {
  VerifyReport rep;

  add_check(rep, "curve_discriminant", [&]() -> std::pair<bool, std::string> {
    Integer d = consts.curve.discriminant();
    const Integer expected("171875264738357288509401290038084940857344");
    if (sgn(d) == 0) return {false, "discriminant is zero"};
    if (d != expected) return {false, "discriminant = " + d.get_str()};
    return {true, "nonzero, discriminant = " + d.get_str()};
  });

  add_check(rep, "point_p_on_curve", [&]() -> std::pair<bool, std::string> {
    return {on_curve(consts.p, consts.curve), "P satisfies Y^2 = X^3 + a4 X + a6"};
  });
  add_check(rep, "generator_g1_on_curve", [&]() -> std::pair<bool, std::string> {
    return {on_curve(consts.g1, consts.curve), "G1 satisfies the curve equation"};
  });
  add_check(rep, "generator_g2_on_curve", [&]() -> std::pair<bool, std::string> {
    return {on_curve(consts.g2, consts.curve), "G2 satisfies the curve equation"};
  });

  add_check(rep, "quartic_coefficients", [&]() -> std::pair<bool, std::string> {
    const QuarticCoeffs qc = quartic_coeffs(consts.m);
    const bool ok = qc.c4 == Rational::parse("2972736/9765625") &&
                    qc.c3 == Rational::parse("55402464/9765625") &&
                    qc.c2 == Rational::parse("-2389884/390625") &&
                    qc.c1 == Rational::parse("-287976/15625") &&
                    qc.c0 == Rational::parse("11076/625");
    return {ok, "coefficients at m = " + consts.m.str() + " match the published values"};
  });

  add_check(rep, "base_point_on_quartic", [&]() -> std::pair<bool, std::string> {
    const bool ok = on_quartic(consts.quartic_point, quartic_coeffs(consts.m));
    return {ok, "(x, y) = (-25/14, -339/245) satisfies the quartic"};
  });

  add_check(rep, "birational_image_of_base_point", [&]() -> std::pair<bool, std::string> {
    const CurvePoint image = to_weierstrass(consts.quartic_point);
    if (image == consts.p) return {true, "maps to P exactly (no Y-negation needed)"};
    if (image == ec_neg(consts.p)) return {true, "maps to -P"};
    return {false, "image differs from P and -P"};
  });

  add_check(rep, "birational_roundtrip", [&]() -> std::pair<bool, std::string> {
    const bool ok = to_quartic(consts.p) == consts.quartic_point;
    return {ok, "P pulls back to the quartic base point"};
  });

  add_check(rep, "first_pair", [&] { return check_pipeline(kFirstPair); });
  add_check(rep, "second_pair", [&] { return check_pipeline(kSecondPair); });

  add_check(rep, "areas_not_integer", [&]() -> std::pair<bool, std::string> {
    for (const ExpectedPair* e : {&kFirstPair, &kSecondPair}) {
      if (is_integer_area(Integer(e->heron))) return {false, "integral area found"};
    }
    return {true, "neither published pair has integer area"};
  });

  add_check(rep, "generation_origin", [&]() -> std::pair<bool, std::string> {
    const GenerationReport g = generate_pairs(0, 0, consts);
    if (g.pairs.size() != 1) return {false, "(k, j) = (0, 0) did not yield one pair"};
    const TrianglePair& pair = g.pairs[0].solution.pair;
    const bool ok = pair.roots1 == int_array("661", "1498", "1515") &&
                    pair.roots2 == int_array("921", "1310", "1553");
    return {ok, "(k, j) = (0, 0) reproduces the first published pair"};
  });

  return rep;
}

}  // namespace squarepairs
