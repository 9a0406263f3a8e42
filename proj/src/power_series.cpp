#include "fanocoeff/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "fanocoeff/errors.hpp"

namespace fanocoeff {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("PowerSeries: needs at least the t^0 coefficient");
  }
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order + 1));
}

PowerSeries PowerSeries::one(std::size_t order) {
  return constant(Rational(1), order);
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::monomial(std::size_t degree, const Rational& c, std::size_t order) {
  if (degree > order) throw std::invalid_argument("PowerSeries::monomial: degree > order");
  std::vector<Rational> v(order + 1);
  v[degree] = c;
  return PowerSeries(std::move(v));
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw std::invalid_argument("PowerSeries::truncated: cannot extend a truncation");
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::shifted_up(std::size_t delta) const {
  std::vector<Rational> v(coeffs_.size() + delta);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + delta);
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a) {
  std::vector<Rational> v(a.coeffs());
  for (auto& c : v) c = -c;
  return PowerSeries(std::move(v));
}

namespace {

std::size_t result_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = result_order(a, b);
  std::vector<Rational> v(n + 1);
  for (std::size_t m = 0; m <= n; ++m) v[m] = a[m] + b[m];
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = result_order(a, b);
  std::vector<Rational> v(n + 1);
  for (std::size_t m = 0; m <= n; ++m) v[m] = a[m] - b[m];
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = result_order(a, b);
  std::vector<Rational> v(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    if (a[p].is_zero()) continue;
    for (std::size_t q = 0; p + q <= n; ++q) {
      if (b[q].is_zero()) continue;
      v[p + q] += a[p] * b[q];
    }
  }
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  std::vector<Rational> v(a.coeffs());
  for (auto& x : v) x *= c;
  return PowerSeries(std::move(v));
}

PowerSeries operator+(const PowerSeries& a, const Rational& c) {
  std::vector<Rational> v(a.coeffs());
  v[0] += c;
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const Rational& c) {
  std::vector<Rational> v(a.coeffs());
  v[0] -= c;
  return PowerSeries(std::move(v));
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
  if (b[0].is_zero()) {
    throw ValuationError(
        "divide: divisor has zero constant term; valuation_split the operands");
  }
  const std::size_t n = result_order(a, b);
  std::vector<Rational> q(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational acc = a[m];
    for (std::size_t p = 0; p < m; ++p) {
      if (q[p].is_zero()) continue;
      acc -= q[p] * b[m - p];
    }
    q[m] = acc / b[0];
  }
  return PowerSeries(std::move(q));
}

ValuedSeries valuation_split(const PowerSeries& a) {
  const auto& c = a.coeffs();
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (!c[v].is_zero()) {
      return ValuedSeries{static_cast<long>(v),
                          PowerSeries(std::vector<Rational>(c.begin() + v, c.end()))};
    }
  }
  throw ZeroSeriesError("valuation_split: series is zero up to its order");
}

ValuedSeries divide_split(const PowerSeries& a, const PowerSeries& b) {
  ValuedSeries va = valuation_split(a);
  ValuedSeries vb = valuation_split(b);
  return ValuedSeries{va.valuation - vb.valuation, divide(va.unit_part, vb.unit_part)};
}

PowerSeries to_power_series(const ValuedSeries& v) {
  if (v.valuation < 0) {
    throw ValuationError("to_power_series: negative valuation is not a power series");
  }
  return v.unit_part.shifted_up(static_cast<std::size_t>(v.valuation));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (!g[0].is_zero()) {
    throw CompositionError("compose: inner series must have zero constant term");
  }
  const std::size_t n = result_order(f, g);
  // Horner on f's coefficients up to n; g has valuation >= 1, so f_m with
  // m > n cannot reach any coefficient <= n.
  PowerSeries acc = PowerSeries::constant(f[n], n);
  const PowerSeries gt = g.order() == n ? g : g.truncated(n);
  for (std::size_t m = n; m-- > 0;) {
    acc = acc * gt + f[m];
  }
  return acc;
}

PowerSeries pow(const PowerSeries& f, unsigned long n) {
  PowerSeries result = PowerSeries::one(f.order());
  PowerSeries base = f;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return result;
}

Generator generator_from_name(std::string_view name) {
  if (name == "bernoulli_egf") return Generator::bernoulli_egf;
  if (name == "one_minus_exp") return Generator::one_minus_exp;
  if (name == "exp_minus_one") return Generator::exp_minus_one;
  if (name == "neg_log_one_minus_over_s") return Generator::neg_log_one_minus_over_s;
  if (name == "log_one_plus_over_t") return Generator::log_one_plus_over_t;
  throw std::invalid_argument("unknown generator name: " + std::string(name));
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::bernoulli_egf: return "bernoulli_egf";
    case Generator::one_minus_exp: return "one_minus_exp";
    case Generator::exp_minus_one: return "exp_minus_one";
    case Generator::neg_log_one_minus_over_s: return "neg_log_one_minus_over_s";
    case Generator::log_one_plus_over_t: return "log_one_plus_over_t";
  }
  throw std::invalid_argument("unknown generator");
}

PowerSeries generator_series(Generator g, std::size_t order) {
  std::vector<Rational> v(order + 1);
  switch (g) {
    case Generator::bernoulli_egf: {
      // t/(e^t - 1) = 1 / ((e^t - 1)/t); the divisor's n-th coefficient is
      // 1/(n+1)!.
      Integer fac(1);
      for (std::size_t n = 0; n <= order; ++n) {
        fac *= Integer(static_cast<unsigned long>(n + 1));
        v[n] = Rational(Integer(1), fac);
      }
      return divide(PowerSeries::one(order), PowerSeries(std::move(v)));
    }
    case Generator::one_minus_exp: {
      Integer fac(1);
      for (std::size_t n = 1; n <= order; ++n) {
        fac *= Integer(static_cast<unsigned long>(n));
        v[n] = Rational(Integer(-1), fac);
      }
      return PowerSeries(std::move(v));
    }
    case Generator::exp_minus_one: {
      Integer fac(1);
      for (std::size_t n = 1; n <= order; ++n) {
        fac *= Integer(static_cast<unsigned long>(n));
        v[n] = Rational(Integer(1), fac);
      }
      return PowerSeries(std::move(v));
    }
    case Generator::neg_log_one_minus_over_s: {
      for (std::size_t n = 0; n <= order; ++n) {
        v[n] = Rational(1, static_cast<long>(n + 1));
      }
      return PowerSeries(std::move(v));
    }
    case Generator::log_one_plus_over_t: {
      for (std::size_t n = 0; n <= order; ++n) {
        v[n] = Rational(n % 2 == 0 ? 1 : -1, static_cast<long>(n + 1));
      }
      return PowerSeries(std::move(v));
    }
  }
  throw std::invalid_argument("unknown generator");
}

std::string to_json_string(const PowerSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back(c.to_string());
  return arr.dump();
}

}  // namespace fanocoeff
