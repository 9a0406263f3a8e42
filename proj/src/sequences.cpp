#include "fanocoeff/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanocoeff {

Rational SequenceCache::bernoulli(std::size_t n) {
  std::scoped_lock lock(mutex_);
  ensure_bernoulli(n);
  return bernoulli_[n];
}

void SequenceCache::ensure_bernoulli(std::size_t n) {
  if (n < bernoulli_.size()) return;
  const std::size_t target = std::max(n, bernoulli_.size() == 0 ? std::size_t{8}
                                                                : 2 * (bernoulli_.size() - 1));
  const PowerSeries egf = generator_series(Generator::bernoulli_egf, target);
  std::vector<Rational> values(target + 1);
  Integer fac(1);
  for (std::size_t m = 0; m <= target; ++m) {
    if (m > 0) fac *= Integer(static_cast<unsigned long>(m));
    values[m] = egf[m] * Rational(fac);
  }
  // Committed entries never change; growth replaces the vector with a longer
  // one holding identical prefixes.
  bernoulli_ = std::move(values);
}

Rational SequenceCache::higher_bernoulli(std::size_t n, std::size_t i) {
  if (i == 0) throw std::domain_error("higher_bernoulli: order i must be >= 1");
  const PowerSeries p = pow(generator_series(Generator::bernoulli_egf, n), i);
  return p[n] * Rational(factorial(static_cast<unsigned long>(n)));
}

Rational SequenceCache::daehee(std::size_t q, std::size_t k) {
  if (k == 0) throw std::domain_error("daehee: order k must be >= 1");
  const PowerSeries p = pow(generator_series(Generator::log_one_plus_over_t, q), k);
  return p[q] * Rational(factorial(static_cast<unsigned long>(q)));
}

Integer SequenceCache::stirling2(std::size_t j, std::size_t p) {
  if (p > j) throw std::domain_error("stirling2: requires p <= j");
  std::scoped_lock lock(mutex_);
  ensure_stirling_rows(j);
  return stirling_rows_[j][p];
}

void SequenceCache::ensure_stirling_rows(std::size_t j) {
  if (j < stirling_rows_.size()) return;
  if (stirling_rows_.empty()) {
    stirling_rows_.push_back({Integer(1)});  // S(0,0) = 1
  }
  for (std::size_t row = stirling_rows_.size(); row <= j; ++row) {
    const auto& prev = stirling_rows_[row - 1];
    std::vector<Integer> cur(row + 1);
    cur[0] = 0;
    for (std::size_t p = 1; p <= row; ++p) {
      Integer t = prev[p - 1];
      if (p < prev.size()) t += Integer(static_cast<unsigned long>(p)) * prev[p];
      cur[p] = t;
    }
    stirling_rows_.push_back(std::move(cur));
  }
}

Rational SequenceCache::harmonic_product_sum(std::size_t k, std::size_t q) {
  if (k == 0) throw std::domain_error("harmonic_product_sum: k must be >= 1");
  std::scoped_lock lock(mutex_);
  ensure_harmonic(k, q);
  return harmonic_rows_[k][q];
}

void SequenceCache::ensure_harmonic(std::size_t k, std::size_t q) {
  if (harmonic_rows_.size() <= k) harmonic_rows_.resize(k + 1);
  // Row 1 is the log series itself; row k is its k-fold Cauchy product,
  // extended coefficient by coefficient so sweeps never recompute a prefix.
  for (std::size_t level = 1; level <= k; ++level) {
    auto& row = harmonic_rows_[level];
    while (row.size() <= q) {
      const std::size_t n = row.size();
      if (level == 1) {
        row.emplace_back(1, static_cast<long>(n + 1));
      } else {
        const auto& prev = harmonic_rows_[level - 1];
        Rational acc;
        for (std::size_t m = 0; m <= n; ++m) {
          acc += prev[m] * Rational(1, static_cast<long>(n - m + 1));
        }
        row.push_back(std::move(acc));
      }
    }
  }
}

void SequenceCache::inject_bernoulli(std::size_t n, const Rational& value) {
  std::scoped_lock lock(mutex_);
  ensure_bernoulli(n);
  bernoulli_[n] = value;
}

Integer multinomial(std::size_t n, const std::vector<std::size_t>& parts) {
  std::size_t sum = 0;
  for (std::size_t p : parts) sum += p;
  if (sum != n) throw std::domain_error("multinomial: parts must sum to n");
  Integer r = factorial(static_cast<unsigned long>(n));
  for (std::size_t p : parts) {
    Integer d = factorial(static_cast<unsigned long>(p));
    r /= d;  // exact by construction
  }
  return r;
}

Rational bernoulli_by_recurrence(std::size_t n) {
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t r = 0; r < m; ++r) {
      acc += Rational(binomial(static_cast<unsigned long>(m + 1),
                               static_cast<unsigned long>(r))) *
             b[r];
    }
    b[m] = -acc / Rational(static_cast<long>(m + 1));
  }
  return b[n];
}

Integer stirling2_by_series(std::size_t j, std::size_t p) {
  if (p > j) throw std::domain_error("stirling2_by_series: requires p <= j");
  const PowerSeries numer = pow(generator_series(Generator::exp_minus_one, j), p);
  const Rational c = numer[j] * Rational(factorial(static_cast<unsigned long>(j)),
                                         factorial(static_cast<unsigned long>(p)));
  return c.numerator();  // denominator is 1: Stirling numbers are integers
}

Rational harmonic_sum_by_enumeration(std::size_t k, std::size_t q, std::size_t max_terms) {
  if (k == 0) throw std::domain_error("harmonic_sum_by_enumeration: k must be >= 1");
  const Integer count = binomial(static_cast<unsigned long>(q + k - 1),
                                 static_cast<unsigned long>(k - 1));
  if (count > Integer(static_cast<unsigned long>(max_terms))) {
    throw std::domain_error("harmonic_sum_by_enumeration: composition count too large");
  }
  // Walk compositions (l_1, ..., l_k) of q in lexicographic order, starting
  // from (q, 0, ..., 0) and ending at (0, ..., 0, q).
  std::vector<std::size_t> l(k, 0);
  l[0] = q;
  Rational total;
  while (true) {
    Integer denom(1);
    for (std::size_t r = 0; r < k; ++r) denom *= Integer(static_cast<unsigned long>(l[r] + 1));
    total += Rational(Integer(1), denom);
    if (l[k - 1] == q) break;
    std::size_t i = k - 2;
    while (l[i] == 0) --i;
    const std::size_t tail = l[k - 1];
    l[k - 1] = 0;
    l[i] -= 1;
    l[i + 1] = tail + 1;
  }
  return total;
}

}  // namespace fanocoeff
