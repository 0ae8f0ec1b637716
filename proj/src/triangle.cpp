#include "squarepairs/triangle.hpp"

#include <algorithm>
#include <ostream>

namespace squarepairs {

Rational perimeter(const Rational& s1, const Rational& s2, const Rational& s3) {
  return s1 + s2 + s3;
}

Rational sixteen_area_sq(const Rational& s1, const Rational& s2, const Rational& s3) {
  return (s1 + s2 + s3) * (-s1 + s2 + s3) * (s1 - s2 + s3) * (s1 + s2 - s3);
}

bool is_triangle(const Rational& s1, const Rational& s2, const Rational& s3) {
  if (s1.sign() <= 0 || s2.sign() <= 0 || s3.sign() <= 0) return false;
  return s1 + s2 > s3 && s1 + s3 > s2 && s2 + s3 > s1;
}

bool is_integer_area(const Integer& sixteen_area_sq) {
  if (sgn(sixteen_area_sq) < 0) return false;
  if (!mpz_divisible_ui_p(sixteen_area_sq.get_mpz_t(), 16)) return false;
  Integer q = sixteen_area_sq / 16;
  return perfect_square_root(q).has_value();
}

const char* to_string(CanonFailure f) {
  switch (f) {
    case CanonFailure::kZeroRootSide: return "ZeroRootSide";
    case CanonFailure::kNotATriangle: return "NotATriangle";
    case CanonFailure::kCongruent: return "Congruent";
    case CanonFailure::kPerimeterMismatch: return "PerimeterMismatch";
    case CanonFailure::kAreaMismatch: return "AreaMismatch";
  }
  return "?";
}

std::array<Integer, 3> TrianglePair::squared1() const {
  return {roots1[0] * roots1[0], roots1[1] * roots1[1], roots1[2] * roots1[2]};
}

std::array<Integer, 3> TrianglePair::squared2() const {
  return {roots2[0] * roots2[0], roots2[1] * roots2[1], roots2[2] * roots2[2]};
}

namespace {

bool lex_less(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

bool operator<(const TrianglePair& a, const TrianglePair& b) {
  if (a.roots1 != b.roots1) return lex_less(a.roots1, b.roots1);
  return lex_less(a.roots2, b.roots2);
}

std::ostream& operator<<(std::ostream& os, const TrianglePair& p) {
  os << "(" << p.roots1[0] << "," << p.roots1[1] << "," << p.roots1[2] << " | "
     << p.roots2[0] << "," << p.roots2[1] << "," << p.roots2[2] << ")";
  return os;
}

std::optional<TrianglePair> canonicalize(const Sextuple& sides, CanonFailure* failure) {
  const auto fail = [&](CanonFailure f) {
    if (failure) *failure = f;
    return std::nullopt;
  };

  const std::array<Rational, 6> roots = sides.to_array();
  for (const Rational& r : roots) {
    if (r.is_zero()) return fail(CanonFailure::kZeroRootSide);
  }

  // Clear denominators, drop signs, divide out the common factor. Scaling
  // the roots by a positive rational scales both squared triangles uniformly
  // and preserves every condition under test.
  Integer scale = 1;
  for (const Rational& r : roots) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.den().get_mpz_t());
  }
  std::array<Integer, 6> v;
  for (int i = 0; i < 6; ++i) {
    Integer n = roots[i].num() * (scale / roots[i].den());
    v[i] = ::abs(n);
  }
  Integer g = 0;
  for (const Integer& n : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  for (Integer& n : v) n /= g;

  std::array<Integer, 3> t1{v[0], v[1], v[2]};
  std::array<Integer, 3> t2{v[3], v[4], v[5]};
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());

  TrianglePair pair;
  pair.roots1 = t1;
  pair.roots2 = t2;
  std::array<Integer, 3> s1 = pair.squared1();
  std::array<Integer, 3> s2 = pair.squared2();
  // Ascending squared sides: only the largest can violate the inequality.
  if (s1[0] + s1[1] <= s1[2] || s2[0] + s2[1] <= s2[2]) {
    return fail(CanonFailure::kNotATriangle);
  }

  // Explicit return type: the gmp expression template must not outlive the
  // temporaries it references.
  const auto heron = [](const std::array<Integer, 3>& s) -> Integer {
    return (s[0] + s[1] + s[2]) * (-s[0] + s[1] + s[2]) * (s[0] - s[1] + s[2]) *
           (s[0] + s[1] - s[2]);
  };
  Integer per1 = s1[0] + s1[1] + s1[2];
  Integer per2 = s2[0] + s2[1] + s2[2];
  if (per1 != per2) return fail(CanonFailure::kPerimeterMismatch);
  Integer h1 = heron(s1);
  Integer h2 = heron(s2);
  if (h1 != h2) return fail(CanonFailure::kAreaMismatch);
  if (t1 == t2) return fail(CanonFailure::kCongruent);

  if (lex_less(pair.roots2, pair.roots1)) std::swap(pair.roots1, pair.roots2);
  pair.perimeter = per1;
  pair.sixteen_area_sq = h1;
  pair.area_is_integer = is_integer_area(h1);
  return pair;
}

}  // namespace squarepairs
