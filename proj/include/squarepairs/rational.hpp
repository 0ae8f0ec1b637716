#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace squarepairs {

// Arbitrary-precision signed integer. All library arithmetic is exact; no
// operation in this project ever rounds.
using Integer = mpz_class;

// Exact rational scalar, always stored in lowest terms with positive
// denominator. Equality and ordering are the usual ones on Q; two equal
// values always have identical (num, den) representations.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  // Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);

  // Accepts "num" or "num/den" in base 10; throws std::invalid_argument on
  // malformed input and std::domain_error on a zero denominator.
  static Rational parse(const std::string& text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  // "num" when den == 1, otherwise "num/den".
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class v_;
};

// Floor of the square root of a nonnegative integer; throws std::domain_error
// for negative input.
Integer isqrt(const Integer& n);

// The exact square root when n is a perfect square, absent otherwise
// (including all negative n).
std::optional<Integer> perfect_square_root(const Integer& n);

// The nonnegative rational square root when q is a square in Q, absent
// otherwise. A reduced fraction is a square iff numerator and denominator
// both are.
std::optional<Rational> rational_square_root(const Rational& q);

}  // namespace squarepairs
