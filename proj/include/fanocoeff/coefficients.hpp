#ifndef FANOCOEFF_COEFFICIENTS_HPP
#define FANOCOEFF_COEFFICIENTS_HPP

#include <cstdint>
#include <map>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fanocoeff/power_series.hpp"
#include "fanocoeff/rational.hpp"
#include "fanocoeff/sequences.hpp"

namespace fanocoeff {

// Index (i, j, k) into the b/d coefficient family, on the extended domain
// i >= 1, j >= 0, k >= 1.
struct TripleIndex {
  long i;
  long j;
  long k;

  TripleIndex(long i_, long j_, long k_);

  friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

enum class Method { recurrence, genfunc, closed_form };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);  // throws std::invalid_argument

// Memoized index -> value map. Re-inserting an index is allowed only with an
// equal value; a differing value means two derivations disagreed, which the
// underlying identities rule out, so it is a hard InternalInconsistency.
class CoeffTable {
 public:
  struct Entry {
    Rational value;
    Method method;
  };

  void insert(const TripleIndex& idx, const Rational& value, Method m);
  const Entry* find(const TripleIndex& idx) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::uint64_t, Entry> entries_;
};

// d = (-1)^j j! b and its inverse.
Rational d_from_b(const TripleIndex& idx, const Rational& b);
Rational b_from_d(const TripleIndex& idx, const Rational& d);

struct CrossValidation {
  std::uint64_t checked_count = 0;
  struct Disagreement {
    TripleIndex idx;
    Rational recurrence;
    Rational genfunc;
    Rational closed_form;
    std::string reason;
  };
  std::vector<Disagreement> witnesses;
  bool pass() const { return witnesses.empty(); }
};

// Computes b_(i,j,k) / d_(i,j,k) by three structurally different methods:
//
//   recurrence   — the defining extension: base row i = 1 from Bernoulli
//                  numbers, then b_(i,j,k) = sum_m (-1)^m B_m/m! b_(i-1,j+1-m,k).
//   genfunc      — coefficient extraction from D_(i,k)(t): (-t)^k/(1-e^t)^i
//                  when k >= i, otherwise the one-step division chain
//                  D_(i,k) = (1/(1-e^t)) (D_(i-1,k) - d_(i-1,0,k)).
//   closed_form  — for i <= k <= i+j a single coefficient of the i-th power
//                  of the sign-flipped Bernoulli EGF; for k < i the
//                  Stirling-weighted sum of harmonic product sums; zero past
//                  k = i+j.
//
// Not thread-safe: each concurrent task owns its engine. The SequenceCache
// may be shared (it locks internally).
class CoefficientEngine {
 public:
  explicit CoefficientEngine(SequenceCache& sequences) : seq_(sequences) {}

  // Compute without touching the shared table (sweep-friendly).
  Rational compute_b(const TripleIndex& idx, Method m);
  Rational compute_d(const TripleIndex& idx, Method m);

  // Compute, record in the table (equal-on-collision enforced), return.
  Rational b(const TripleIndex& idx, Method m);
  Rational d(const TripleIndex& idx, Method m);

  Rational b_recurrence(const TripleIndex& idx);
  Rational d_genfunc(const TripleIndex& idx);
  Rational b_closed_form(const TripleIndex& idx);

  // All three methods on every index 1 <= i <= i_max, 0 <= j <= j_max,
  // 1 <= k <= i+j+2 (two indices past the vanishing boundary), plus the
  // explicit zero check for k > i+j. Disagreement is reported, not thrown.
  CrossValidation cross_validate(long i_max, long j_max);

  // Builds the k-th genfunc division chain up to index i_max with enough
  // guard order for coefficients j <= j_max; sweeps call this once per k.
  void prewarm_genfunc_chain(long k, long i_max, long j_max);

  CoeffTable& table() { return table_; }
  SequenceCache& sequences() { return seq_; }

 private:
  struct GenfuncChain {
    std::size_t base_order = 0;           // order D_(1,k) was computed at
    std::vector<PowerSeries> d_series;    // d_series[m] = D_(m+1,k)
  };

  const PowerSeries& genfunc_series(long k, long i, std::size_t min_order);
  Rational recurrence_impl(long i, long j, long k);

  SequenceCache& seq_;
  CoeffTable table_;
  std::unordered_map<std::uint64_t, Rational> recurrence_memo_;
  std::map<long, GenfuncChain> genfunc_chains_;
};

}  // namespace fanocoeff

#endif
