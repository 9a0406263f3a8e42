#ifndef FANOCOEFF_POWER_SERIES_HPP
#define FANOCOEFF_POWER_SERIES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fanocoeff/rational.hpp"

namespace fanocoeff {

// Truncated formal power series over Rational. The truncation order is part
// of the value: coefficients of t^n for n > order are unknown, not zero, and
// every operation propagates the largest order at which its result is still
// fully determined by the inputs.
class PowerSeries {
 public:
  // coeffs[n] is the coefficient of t^n; order = coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries one(std::size_t order);
  static PowerSeries constant(const Rational& c, std::size_t order);
  // c * t^degree, known through the given order (degree <= order).
  static PowerSeries monomial(std::size_t degree, const Rational& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // True when every known coefficient is zero.
  bool is_zero() const;

  // Restriction to a smaller truncation order (new_order <= order).
  PowerSeries truncated(std::size_t new_order) const;
  // Multiplication by t^delta. Every added low coefficient is exactly zero,
  // so the result is known through order + delta.
  PowerSeries shifted_up(std::size_t delta) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// t^valuation * unit_part(t) with unit_part(0) != 0. A negative valuation
// encodes a formal Laurent series with finite principal part.
struct ValuedSeries {
  long valuation = 0;
  PowerSeries unit_part;
};

PowerSeries operator-(const PowerSeries& a);
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);  // Cauchy product
PowerSeries operator*(const Rational& c, const PowerSeries& a);

// Adding a constant touches only the t^0 coefficient.
PowerSeries operator+(const PowerSeries& a, const Rational& c);
PowerSeries operator-(const PowerSeries& a, const Rational& c);

// Quotient with unit divisor. Throws ValuationError when b(0) = 0: split the
// operands with valuation_split and subtract valuations instead.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

// Factors a = t^v * unit with unit(0) != 0. Throws ZeroSeriesError when every
// known coefficient of a is zero.
ValuedSeries valuation_split(const PowerSeries& a);

// a / b allowing divisors with positive valuation; the result valuation may
// be negative. Exact Laurent-style division of the unit parts.
ValuedSeries divide_split(const PowerSeries& a, const PowerSeries& b);

// Re-attaches a nonnegative valuation as explicit zero coefficients.
PowerSeries to_power_series(const ValuedSeries& v);

// f(g) for g with zero constant term (throws CompositionError otherwise).
// Horner accumulation; the result is determined to min(f.order, g.order).
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

// f^n by binary exponentiation; pow(f, 0) = 1 at the same order.
PowerSeries pow(const PowerSeries& f, unsigned long n);

// The named generator series the coefficient family is built from.
enum class Generator {
  bernoulli_egf,            // t/(e^t - 1) = sum B_n t^n/n!
  one_minus_exp,            // 1 - e^t
  exp_minus_one,            // e^t - 1
  neg_log_one_minus_over_s, // -log(1-s)/s = sum s^q/(q+1)
  log_one_plus_over_t,      // log(1+t)/t = sum (-1)^q t^q/(q+1)
};

// Throws std::invalid_argument for an unknown generator name.
Generator generator_from_name(std::string_view name);
std::string_view generator_name(Generator g);

PowerSeries generator_series(Generator g, std::size_t order);

// Debug dump: JSON array of "p/q" coefficient strings, index = exponent.
std::string to_json_string(const PowerSeries& s);

}  // namespace fanocoeff

#endif
