#ifndef FANOCOEFF_RATIONAL_HPP
#define FANOCOEFF_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fanocoeff {

// Unbounded signed integer. GMP supplies the arithmetic; everything built on
// top of it stays exact by construction.
using Integer = mpz_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// Exact fraction of unbounded integers, kept in canonical reduced form at all
// times: denominator >= 1, gcd(|numerator|, denominator) = 1, zero is 0/1.
// Immutable value semantics; every operation returns a fresh canonical value.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit integer promotion is intended
  explicit Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  // Parses "p/q" or "p". Throws std::invalid_argument on malformed input and
  // DivisionByZero on a zero denominator.
  static Rational from_string(std::string_view s);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  // Canonical serialization: "p/q" with q > 1, plain "p" for integers.
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws DivisionByZero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c <=> 0;
  }

 private:
  mpq_class value_;
};

// Total order consistent with the real-number order; no floating point.
std::strong_ordering compare(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fanocoeff

#endif
