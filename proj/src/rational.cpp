#include "fanocoeff/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "fanocoeff/errors.hpp"

namespace fanocoeff {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (sgn(den) == 0) throw DivisionByZero("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::from_string(std::string_view s) {
  const std::string text(s);
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  }
  if (sgn(q.get_den()) == 0) {
    throw DivisionByZero("Rational: zero denominator in \"" + text + "\"");
  }
  q.canonicalize();
  Rational r;
  r.value_ = q;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  return a <=> b;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace fanocoeff
