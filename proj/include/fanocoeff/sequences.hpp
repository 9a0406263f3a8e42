#ifndef FANOCOEFF_SEQUENCES_HPP
#define FANOCOEFF_SEQUENCES_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "fanocoeff/power_series.hpp"
#include "fanocoeff/rational.hpp"

namespace fanocoeff {

// Named special-number sequences. Each main path follows the defining
// generating function; an independent combinatorial route exists for each
// (bernoulli_by_recurrence, stirling2_by_series, harmonic_sum_by_enumeration)
// so that no value is ever trusted on one derivation alone.
//
// Caches are insert-only and guarded by a mutex: committed entries are never
// mutated, and concurrent readers may share one instance.
class SequenceCache {
 public:
  SequenceCache() = default;
  SequenceCache(const SequenceCache&) = delete;
  SequenceCache& operator=(const SequenceCache&) = delete;

  // B_n from t/(e^t - 1) = sum B_n t^n/n!.
  Rational bernoulli(std::size_t n);

  // B_n^{(i)} from (t/(e^t - 1))^i; i >= 1.
  Rational higher_bernoulli(std::size_t n, std::size_t i);

  // D_q^{(k)} from (log(1+t)/t)^k = sum D_q^{(k)} t^q/q!; k >= 1.
  Rational daehee(std::size_t q, std::size_t k);

  // S(j, p) by the triangular recurrence S(j,p) = p S(j-1,p) + S(j-1,p-1).
  // Throws std::domain_error when p > j.
  Integer stirling2(std::size_t j, std::size_t p);

  // sum over l_1+...+l_k = q of 1/((l_1+1)...(l_k+1)), computed as the
  // convolution coefficient [s^q] (-log(1-s)/s)^k; k >= 1. Rows of the power
  // are cached and extended on demand.
  Rational harmonic_product_sum(std::size_t k, std::size_t q);

  // Fault-injection hook for harness sensitivity tests: plants a wrong B_n so
  // downstream identity checks must produce witnesses. Never call outside of
  // testing.
  void inject_bernoulli(std::size_t n, const Rational& value);

 private:
  void ensure_bernoulli(std::size_t n);
  void ensure_stirling_rows(std::size_t j);
  void ensure_harmonic(std::size_t k, std::size_t q);

  std::mutex mutex_;
  std::vector<Rational> bernoulli_;
  std::vector<std::vector<Integer>> stirling_rows_;
  // harmonic_rows_[k] holds [s^q] (-log(1-s)/s)^k, q ascending; index 0 unused.
  std::vector<std::vector<Rational>> harmonic_rows_;
};

// n! / (l_1! ... l_i!) for parts summing to n (std::domain_error otherwise).
Integer multinomial(std::size_t n, const std::vector<std::size_t>& parts);

// Classical recurrence sum_{m=0}^{n} C(n+1,m) B_m = 0 solved for B_n.
// Independent of the series-division main path; kept as its oracle.
Rational bernoulli_by_recurrence(std::size_t n);

// j! [t^j] (e^t - 1)^p / p!; cross-check path for stirling2.
Integer stirling2_by_series(std::size_t j, std::size_t p);

// Direct enumeration of compositions of q into k nonnegative parts.
// Exponential; throws std::domain_error when the composition count exceeds
// max_terms.
Rational harmonic_sum_by_enumeration(std::size_t k, std::size_t q,
                                     std::size_t max_terms = 2000000);

}  // namespace fanocoeff

#endif
