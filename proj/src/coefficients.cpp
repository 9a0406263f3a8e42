#include "fanocoeff/coefficients.hpp"

#include <stdexcept>
#include <string>

#include "fanocoeff/errors.hpp"

namespace fanocoeff {

namespace {

constexpr long kIndexLimit = 1L << 20;

std::uint64_t pack(long i, long j, long k) {
  return (static_cast<std::uint64_t>(i) << 40) | (static_cast<std::uint64_t>(j) << 20) |
         static_cast<std::uint64_t>(k);
}

std::uint64_t pack(const TripleIndex& idx) { return pack(idx.i, idx.j, idx.k); }

Rational rat_factorial(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

// (-1)^l B_l / l! coefficients; this is the Bernoulli EGF evaluated at -t.
PowerSeries signed_bernoulli_egf(std::size_t order) {
  PowerSeries egf = generator_series(Generator::bernoulli_egf, order);
  std::vector<Rational> v(egf.coeffs());
  for (std::size_t n = 1; n < v.size(); n += 2) v[n] = -v[n];
  return PowerSeries(std::move(v));
}

}  // namespace

TripleIndex::TripleIndex(long i_, long j_, long k_) : i(i_), j(j_), k(k_) {
  if (i < 1 || j < 0 || k < 1) {
    throw std::domain_error("TripleIndex: requires i >= 1, j >= 0, k >= 1");
  }
  if (i >= kIndexLimit || j >= kIndexLimit || k >= kIndexLimit) {
    throw std::domain_error("TripleIndex: index exceeds supported range");
  }
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::recurrence: return "recurrence";
    case Method::genfunc: return "genfunc";
    case Method::closed_form: return "closed";
  }
  throw std::invalid_argument("unknown method");
}

Method method_from_name(std::string_view name) {
  if (name == "recurrence") return Method::recurrence;
  if (name == "genfunc") return Method::genfunc;
  if (name == "closed" || name == "closed_form") return Method::closed_form;
  throw std::invalid_argument("unknown method name: " + std::string(name));
}

void CoeffTable::insert(const TripleIndex& idx, const Rational& value, Method m) {
  auto [it, inserted] = entries_.try_emplace(pack(idx), Entry{value, m});
  if (!inserted && it->second.value != value) {
    throw InternalInconsistency(
        "CoeffTable: methods disagree at (" + std::to_string(idx.i) + "," +
        std::to_string(idx.j) + "," + std::to_string(idx.k) + "): " +
        it->second.value.to_string() + " (" + std::string(method_name(it->second.method)) +
        ") vs " + value.to_string() + " (" + std::string(method_name(m)) + ")");
  }
}

const CoeffTable::Entry* CoeffTable::find(const TripleIndex& idx) const {
  auto it = entries_.find(pack(idx));
  return it == entries_.end() ? nullptr : &it->second;
}

Rational d_from_b(const TripleIndex& idx, const Rational& b) {
  const Rational scale = rat_factorial(idx.j);
  return idx.j % 2 == 0 ? scale * b : -(scale * b);
}

Rational b_from_d(const TripleIndex& idx, const Rational& d) {
  const Rational scale = rat_factorial(idx.j);
  const Rational b = d / scale;
  return idx.j % 2 == 0 ? b : -b;
}

Rational CoefficientEngine::compute_b(const TripleIndex& idx, Method m) {
  switch (m) {
    case Method::recurrence: return b_recurrence(idx);
    case Method::genfunc: return b_from_d(idx, d_genfunc(idx));
    case Method::closed_form: return b_closed_form(idx);
  }
  throw std::invalid_argument("unknown method");
}

Rational CoefficientEngine::compute_d(const TripleIndex& idx, Method m) {
  if (m == Method::genfunc) return d_genfunc(idx);
  return d_from_b(idx, compute_b(idx, m));
}

Rational CoefficientEngine::b(const TripleIndex& idx, Method m) {
  Rational value = compute_b(idx, m);
  table_.insert(idx, value, m);
  return value;
}

Rational CoefficientEngine::d(const TripleIndex& idx, Method m) {
  return d_from_b(idx, b(idx, m));
}

// ---------------------------------------------------------------------------
// Method 1: the defining recurrence on the extended domain.
// ---------------------------------------------------------------------------

Rational CoefficientEngine::b_recurrence(const TripleIndex& idx) {
  return recurrence_impl(idx.i, idx.j, idx.k);
}

Rational CoefficientEngine::recurrence_impl(long i, long j, long k) {
  const std::uint64_t key = pack(i, j, k);
  if (auto it = recurrence_memo_.find(key); it != recurrence_memo_.end()) {
    return it->second;
  }
  Rational value;
  if (i == 1) {
    if (k <= 1 + j) {
      const long n = j + 1 - k;
      value = seq_.bernoulli(static_cast<std::size_t>(n)) / rat_factorial(n);
      if (n % 2 != 0) value = -value;
    }
    // k > 1 + j stays zero
  } else {
    for (long m = 0; m <= j; ++m) {
      Rational w = seq_.bernoulli(static_cast<std::size_t>(m)) / rat_factorial(m);
      if (m % 2 != 0) w = -w;
      if (w.is_zero()) continue;  // odd Bernoulli numbers beyond B_1
      value += w * recurrence_impl(i - 1, j + 1 - m, k);
    }
  }
  recurrence_memo_.emplace(key, value);
  return value;
}

// ---------------------------------------------------------------------------
// Method 2: coefficient extraction from the generating function D_(i,k)(t).
// ---------------------------------------------------------------------------

const PowerSeries& CoefficientEngine::genfunc_series(long k, long i, std::size_t min_order) {
  auto it = genfunc_chains_.find(k);
  const bool enough = it != genfunc_chains_.end() &&
                      it->second.d_series.size() >= static_cast<std::size_t>(i) &&
                      it->second.d_series[static_cast<std::size_t>(i) - 1].order() >= min_order;
  if (!enough) {
    // Rebuild with geometric length growth so ascending-i sweeps trigger
    // O(log i) rebuilds; the guard order only ever grows additively, enough
    // to keep earlier queries and this one covered.
    const std::size_t old_base = it == genfunc_chains_.end() ? 0 : it->second.base_order;
    const long old_len =
        it == genfunc_chains_.end() ? 0 : static_cast<long>(it->second.d_series.size());
    const long want_len = std::max(i, 2 * old_len);
    const long keep_old = static_cast<long>(old_base) - want_len - (k - 1) + 1;
    const long want_jmax = std::max(static_cast<long>(min_order) + 1, keep_old);
    prewarm_genfunc_chain(k, want_len, want_jmax);
    it = genfunc_chains_.find(k);
  }
  return it->second.d_series[static_cast<std::size_t>(i) - 1];
}

void CoefficientEngine::prewarm_genfunc_chain(long k, long i_max, long j_max) {
  // Every division by 1 - e^t costs one order of certainty, so a guard of
  // i_max on top of the largest coefficient wanted keeps the tail exact.
  const std::size_t ord = static_cast<std::size_t>(j_max + i_max);
  auto& chain = genfunc_chains_[k];
  if (chain.base_order >= ord + static_cast<std::size_t>(k) - 1 &&
      chain.d_series.size() >= static_cast<std::size_t>(i_max)) {
    return;
  }

  const PowerSeries one_minus = generator_series(Generator::one_minus_exp, ord + 1);
  const ValuedSeries split = valuation_split(one_minus);  // 1 - e^t = t * u, u(0) = -1
  const PowerSeries& u = split.unit_part;                 // order: ord

  // D_(1,k) = (-t)^k / (1 - e^t) = (-1)^k t^(k-1) u^(-1).
  PowerSeries u_inv = divide(PowerSeries::one(u.order()), u);
  if (k % 2 != 0) u_inv = -u_inv;
  PowerSeries d_cur = u_inv.shifted_up(static_cast<std::size_t>(k) - 1);

  GenfuncChain fresh;
  fresh.base_order = d_cur.order();
  fresh.d_series.push_back(d_cur);
  for (long step = 2; step <= i_max; ++step) {
    const PowerSeries& prev = fresh.d_series.back();
    const long prev_i = step - 1;
    // The t^0 coefficient of D_(prev_i,k) is d_(prev_i,0,k); the theory pins
    // it to 0 below the diagonal and to the harmonic product sum on or above
    // it. A mismatch here is a bug, never data.
    const Rational constant = prev[0];
    const Rational expected =
        prev_i < k ? Rational(0)
                   : seq_.harmonic_product_sum(static_cast<std::size_t>(k),
                                               static_cast<std::size_t>(prev_i - k));
    if (constant != expected) {
      throw InternalInconsistency(
          "genfunc chain k=" + std::to_string(k) + ": constant term of D_(" +
          std::to_string(prev_i) + ") is " + constant.to_string() + ", expected " +
          expected.to_string());
    }
    const PowerSeries numerator = prev - constant;
    const ValuedSeries vs = valuation_split(numerator);
    const PowerSeries quotient = divide(vs.unit_part, u);
    fresh.d_series.push_back(
        quotient.shifted_up(static_cast<std::size_t>(vs.valuation) - 1));
  }
  genfunc_chains_[k] = std::move(fresh);
}

Rational CoefficientEngine::d_genfunc(const TripleIndex& idx) {
  const long i = idx.i, j = idx.j, k = idx.k;
  if (k >= i) {
    // D_(i,k)(t) = (-t)^k/(1-e^t)^i = (-1)^k t^(k-i) u(t)^(-i).
    const long shift = k - i;
    if (j < shift) return Rational(0);  // below the valuation: d vanishes
    const std::size_t ord = static_cast<std::size_t>(j - shift);
    const PowerSeries one_minus = generator_series(Generator::one_minus_exp, ord + 1);
    const PowerSeries& u = valuation_split(one_minus).unit_part;
    const PowerSeries u_inv_i = pow(divide(PowerSeries::one(u.order()), u),
                                    static_cast<unsigned long>(i));
    Rational c = u_inv_i[ord] * rat_factorial(j);
    return k % 2 == 0 ? c : -c;
  }
  const PowerSeries& d_series = genfunc_series(k, i, static_cast<std::size_t>(j));
  return d_series[static_cast<std::size_t>(j)] * rat_factorial(j);
}

// ---------------------------------------------------------------------------
// Method 3: the explicit formula.
// ---------------------------------------------------------------------------

Rational CoefficientEngine::b_closed_form(const TripleIndex& idx) {
  const long i = idx.i, j = idx.j, k = idx.k;
  if (k > i + j) return Rational(0);
  if (k >= i) {
    // sum over compositions l_1+...+l_i = i+j-k of prod (-1)^l B_l/l!,
    // i.e. one coefficient of the i-th power of the sign-flipped EGF.
    const std::size_t m = static_cast<std::size_t>(i + j - k);
    const PowerSeries p = pow(signed_bernoulli_egf(m), static_cast<unsigned long>(i));
    return p[m];
  }
  // k < i: (1/((-1)^j j!)) sum_p (-1)^p p! S(j,p) * H(k, p+i-k).
  Rational sum;
  for (long p = 0; p <= j; ++p) {
    const Integer s = seq_.stirling2(static_cast<std::size_t>(j), static_cast<std::size_t>(p));
    if (sgn(s) == 0) continue;
    Rational term = Rational(s) * rat_factorial(p) *
                    seq_.harmonic_product_sum(static_cast<std::size_t>(k),
                                              static_cast<std::size_t>(p + i - k));
    if (p % 2 != 0) term = -term;
    sum += term;
  }
  Rational b = sum / rat_factorial(j);
  return j % 2 == 0 ? b : -b;
}

// ---------------------------------------------------------------------------
// Cross-validation sweep.
// ---------------------------------------------------------------------------

CrossValidation CoefficientEngine::cross_validate(long i_max, long j_max) {
  if (i_max < 1 || j_max < 1) {
    throw std::domain_error("cross_validate: bounds must be >= 1");
  }
  for (long k = 1; k < i_max; ++k) {
    prewarm_genfunc_chain(k, i_max, j_max);
  }
  CrossValidation result;
  for (long i = 1; i <= i_max; ++i) {
    for (long j = 0; j <= j_max; ++j) {
      for (long k = 1; k <= i + j + 2; ++k) {
        const TripleIndex idx(i, j, k);
        ++result.checked_count;
        const Rational r = b_recurrence(idx);
        const Rational g = b_from_d(idx, d_genfunc(idx));
        const Rational c = b_closed_form(idx);
        std::string reason;
        if (!(r == g && g == c)) {
          reason = "methods disagree";
        } else if (k > i + j && !r.is_zero()) {
          reason = "nonzero past the vanishing boundary k > i+j";
        }
        if (!reason.empty()) {
          result.witnesses.push_back({idx, r, g, c, reason});
        } else {
          table_.insert(idx, r, Method::recurrence);
        }
      }
    }
  }
  return result;
}

}  // namespace fanocoeff
