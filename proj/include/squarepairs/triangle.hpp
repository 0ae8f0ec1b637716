#pragma once

#include "squarepairs/rational.hpp"

#include <array>
#include <iosfwd>
#include <optional>

namespace squarepairs {

// Root sides (a, b, c, d, e, f) of a candidate pair: the two triangles have
// sides a^2, b^2, c^2 and d^2, e^2, f^2. Signs of the roots are irrelevant.
struct Sextuple {
  Rational a, b, c, d, e, f;

  std::array<Rational, 6> to_array() const { return {a, b, c, d, e, f}; }
};

Rational perimeter(const Rational& s1, const Rational& s2, const Rational& s3);

// 16 * Area^2 by Heron's formula:
// (s1+s2+s3)(-s1+s2+s3)(s1-s2+s3)(s1+s2-s3).
Rational sixteen_area_sq(const Rational& s1, const Rational& s2, const Rational& s3);

// Strict triangle inequality with positive sides; degenerate (flat) triples
// are rejected.
bool is_triangle(const Rational& s1, const Rational& s2, const Rational& s3);

// Whether 16*Area^2 corresponds to an integer area, i.e. equals 16*w^2 for
// an integer w.
bool is_integer_area(const Integer& sixteen_area_sq);

enum class CanonFailure {
  kZeroRootSide,
  kNotATriangle,
  kCongruent,
  kPerimeterMismatch,
  kAreaMismatch,
};
const char* to_string(CanonFailure f);

// A verified pair in canonical form: positive integer root sides, gcd 1
// across all six, each triple ascending, roots1 lexicographically smaller
// than roots2. Perimeter and sixteen_area_sq refer to the squared sides and
// are common to both triangles by construction.
struct TrianglePair {
  std::array<Integer, 3> roots1;
  std::array<Integer, 3> roots2;
  Integer perimeter;
  Integer sixteen_area_sq;
  bool area_is_integer = false;

  std::array<Integer, 3> squared1() const;
  std::array<Integer, 3> squared2() const;

  friend bool operator==(const TrianglePair& a, const TrianglePair& b) {
    return a.roots1 == b.roots1 && a.roots2 == b.roots2;
  }
  friend bool operator!=(const TrianglePair& a, const TrianglePair& b) { return !(a == b); }
  // Lexicographic on (roots1, roots2); usable as an ordered-container key.
  friend bool operator<(const TrianglePair& a, const TrianglePair& b);

  friend std::ostream& operator<<(std::ostream& os, const TrianglePair& p);
};

// Scales a sextuple of root sides to a primitive integer pair and validates
// it. Returns absent (with the cause in *failure when given) when a root is
// zero, a squared triple fails the strict triangle inequality, or the two
// triangles are congruent. Mismatched perimeters or Heron products also
// yield absent; those cannot arise from the parametrized substitution.
std::optional<TrianglePair> canonicalize(const Sextuple& sides,
                                         CanonFailure* failure = nullptr);

}  // namespace squarepairs
