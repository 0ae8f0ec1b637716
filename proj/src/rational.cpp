#include "squarepairs/rational.hpp"

#include <ostream>

namespace squarepairs {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt: negative input");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Integer> perfect_square_root(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

std::optional<Rational> rational_square_root(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  std::optional<Integer> rn = perfect_square_root(q.num());
  if (!rn) return std::nullopt;
  std::optional<Integer> rd = perfect_square_root(q.den());
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

}  // namespace squarepairs
