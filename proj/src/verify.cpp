#include "fanocoeff/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <random>
#include <stdexcept>
#include <thread>

#include "fanocoeff/errors.hpp"
#include "fanocoeff/version.hpp"

namespace fanocoeff {

namespace {

std::string utc_now_iso8601() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json witness_json(const Witness& w) {
  return {{"i", w.i}, {"j", w.j}, {"k", w.k}, {"value", w.value}, {"reason", w.reason}};
}

}  // namespace

nlohmann::json Certificate::to_json() const {
  nlohmann::json witness_array = nlohmann::json::array();
  for (const auto& w : witnesses) witness_array.push_back(witness_json(w));
  return {{"claim", {{"property", property}, {"params", params}}},
          {"verdict", pass ? "pass" : "fail"},
          {"checked_count", checked_count},
          {"witnesses", witness_array},
          {"produced_at", produced_at},
          {"tool_version", tool_version}};
}

std::string Certificate::file_stem() const {
  std::string stem = property;
  if (property == "positivity") {
    stem = "certify-N" + params.at("N").dump() + "-" + params.at("method").get<std::string>();
  }
  return stem;
}

Certificate make_certificate(std::string property, nlohmann::json params,
                             std::uint64_t checked_count, std::vector<Witness> witnesses) {
  Certificate c;
  c.property = std::move(property);
  c.params = std::move(params);
  c.checked_count = checked_count;
  c.pass = witnesses.empty();
  c.witnesses = std::move(witnesses);
  c.produced_at = utc_now_iso8601();
  c.tool_version = std::string(kToolName) + " " + kToolVersion;
  return c;
}

// ---------------------------------------------------------------------------
// Positivity certification.
// ---------------------------------------------------------------------------

namespace {

std::vector<TripleIndex> positivity_range(long n) {
  std::vector<TripleIndex> indices;
  for (long i = 1; i < n; ++i) {
    for (long j = 1; j <= 2; ++j) {
      for (long k = 1; k <= i + j; ++k) indices.emplace_back(i, j, k);
    }
  }
  return indices;
}

void prewarm_for_closed_form(SequenceCache& seq, long n) {
  seq.bernoulli(2);
  seq.stirling2(2, 2);
  // Row k of the harmonic triangle is consulted at q = i - k + p, p <= 2,
  // i < n; touching the largest q builds the whole prefix.
  for (long k = 1; k <= n - 2; ++k) {
    seq.harmonic_product_sum(static_cast<std::size_t>(k),
                             static_cast<std::size_t>(n + 1 - k));
  }
}

}  // namespace

Certificate certify_positivity(SequenceCache& seq, long n, Method method, unsigned shards) {
  if (n < 2) throw std::domain_error("certify_positivity: N must be >= 2");
  if (shards == 0) shards = 1;

  const std::vector<TripleIndex> indices = positivity_range(n);
  if (method == Method::closed_form && n > 2) prewarm_for_closed_form(seq, n);

  const std::size_t total = indices.size();
  const std::size_t shard_count = std::min<std::size_t>(shards, std::max<std::size_t>(total, 1));
  std::vector<std::vector<Witness>> shard_witnesses(shard_count);

  auto run_shard = [&](std::size_t s) {
    CoefficientEngine engine(seq);
    const std::size_t begin = total * s / shard_count;
    const std::size_t end = total * (s + 1) / shard_count;
    if (method == Method::genfunc && begin < end) {
      // one chain per k, sized for the whole chunk, instead of incremental
      // rebuilds as i climbs
      long max_i = 1;
      for (std::size_t pos = begin; pos < end; ++pos) max_i = std::max(max_i, indices[pos].i);
      for (long k = 1; k < max_i; ++k) engine.prewarm_genfunc_chain(k, max_i, 3);
    }
    for (std::size_t pos = begin; pos < end; ++pos) {
      const TripleIndex& idx = indices[pos];
      const Rational value = engine.compute_b(idx, method);
      if (compare(value, Rational(0)) <= 0) {
        shard_witnesses[s].push_back(
            {idx.i, idx.j, idx.k, value.to_string(), "not strictly positive"});
      }
    }
  };

  if (shard_count == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(shard_count);
    for (std::size_t s = 0; s < shard_count; ++s) threads.emplace_back(run_shard, s);
    for (auto& t : threads) t.join();
  }

  std::vector<Witness> witnesses;
  for (auto& part : shard_witnesses) {
    witnesses.insert(witnesses.end(), part.begin(), part.end());
  }
  return make_certificate(
      "positivity",
      {{"N", n}, {"j_set", {1, 2}}, {"method", std::string(method_name(method))}},
      total, std::move(witnesses));
}

// ---------------------------------------------------------------------------
// Cross-validation certificate.
// ---------------------------------------------------------------------------

Certificate cross_validate_certificate(SequenceCache& seq, long i_max, long j_max) {
  CoefficientEngine engine(seq);
  CrossValidation cv = engine.cross_validate(i_max, j_max);
  std::vector<Witness> witnesses;
  witnesses.reserve(cv.witnesses.size());
  for (const auto& w : cv.witnesses) {
    witnesses.push_back({w.idx.i, w.idx.j, w.idx.k, w.recurrence.to_string(),
                         w.reason + " (recurrence=" + w.recurrence.to_string() +
                             ", genfunc=" + w.genfunc.to_string() +
                             ", closed=" + w.closed_form.to_string() + ")"});
  }
  return make_certificate("three-method-agreement", {{"i_max", i_max}, {"j_max", j_max}},
                          cv.checked_count, std::move(witnesses));
}

// ---------------------------------------------------------------------------
// Identity regression suite.
// ---------------------------------------------------------------------------

namespace {

using IdentityFn = Certificate (*)(SequenceCache&, const IdentityBounds&);

void expect_equal(std::vector<Witness>& witnesses, long i, long j, long k,
                  const Rational& got, const Rational& expected, const char* what) {
  if (got != expected) {
    witnesses.push_back({i, j, k, got.to_string(),
                         std::string(what) + ": expected " + expected.to_string()});
  }
}

Certificate identity_vanishing(SequenceCache& seq, const IdentityBounds& b) {
  CoefficientEngine engine(seq);
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  for (long i = 1; i <= b.vanishing_i; ++i) {
    for (long j = 0; j <= b.vanishing_j; ++j) {
      for (long k = i + j + 1; k <= i + j + b.vanishing_slack; ++k) {
        const TripleIndex idx(i, j, k);
        ++count;
        const Rational r = engine.b_recurrence(idx);
        const Rational c = engine.b_closed_form(idx);
        if (!r.is_zero() || !c.is_zero()) {
          witnesses.push_back({i, j, k, r.to_string(), "expected exact zero past k = i+j"});
        }
      }
    }
  }
  return make_certificate("vanishing",
                          {{"i_max", b.vanishing_i},
                           {"j_max", b.vanishing_j},
                           {"k_slack", b.vanishing_slack}},
                          count, std::move(witnesses));
}

Certificate identity_daehee(SequenceCache& seq, const IdentityBounds& b) {
  CoefficientEngine engine(seq);
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  for (long k = 1; k <= b.daehee_k; ++k) {
    for (long q = 0; q <= b.daehee_q; ++q) {
      ++count;
      const TripleIndex idx(q + k, 0, k);
      const Rational d = engine.compute_d(idx, Method::recurrence);
      Rational expected = seq.daehee(static_cast<std::size_t>(q), static_cast<std::size_t>(k)) /
                          Rational(factorial(static_cast<unsigned long>(q)));
      if (q % 2 != 0) expected = -expected;
      expect_equal(witnesses, idx.i, idx.j, idx.k, d, expected,
                   "d_(q+k,0,k) != (-1)^q D_q^(k)/q!");
    }
  }
  return make_certificate("daehee-identity", {{"q_max", b.daehee_q}, {"k_max", b.daehee_k}},
                          count, std::move(witnesses));
}

Certificate identity_higher_bernoulli(SequenceCache& seq, const IdentityBounds& b) {
  CoefficientEngine engine(seq);
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  for (long i = 1; i <= b.hob_i; ++i) {
    for (long j = 0; j <= b.hob_j; ++j) {
      for (long k = i; k <= i + j; ++k) {
        ++count;
        const TripleIndex idx(i, j, k);
        const Rational d = engine.compute_d(idx, Method::recurrence);
        Rational expected =
            seq.higher_bernoulli(static_cast<std::size_t>(i + j - k),
                                 static_cast<std::size_t>(i)) *
            Rational(factorial(static_cast<unsigned long>(j)),
                     factorial(static_cast<unsigned long>(i + j - k)));
        if ((k - i) % 2 != 0) expected = -expected;
        expect_equal(witnesses, i, j, k, d, expected,
                     "d_(i,j,k) != (-1)^(k-i) B^(i)_(i+j-k) j!/(i+j-k)!");
      }
    }
  }
  return make_certificate("higher-bernoulli-identity", {{"i_max", b.hob_i}, {"j_max", b.hob_j}},
                          count, std::move(witnesses));
}

Certificate identity_corlog(SequenceCache& seq, const IdentityBounds& b) {
  CoefficientEngine engine(seq);
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  for (long k = 1; k <= b.corlog_k; ++k) {
    for (long q = 0; q <= b.corlog_q; ++q) {
      ++count;
      const TripleIndex idx(q + k, 0, k);
      const Rational d = engine.compute_d(idx, Method::recurrence);
      const Rational conv = seq.harmonic_product_sum(static_cast<std::size_t>(k),
                                                     static_cast<std::size_t>(q));
      const Rational enumerated =
          harmonic_sum_by_enumeration(static_cast<std::size_t>(k), static_cast<std::size_t>(q));
      if (conv != enumerated) {
        witnesses.push_back({idx.i, idx.j, idx.k, conv.to_string(),
                             "convolution and enumeration paths disagree: enumeration = " +
                                 enumerated.to_string()});
      }
      expect_equal(witnesses, idx.i, idx.j, idx.k, d, conv,
                   "d_(q+k,0,k) != harmonic product sum H(k,q)");
    }
  }
  return make_certificate("corlog-identity", {{"k_max", b.corlog_k}, {"q_max", b.corlog_q}},
                          count, std::move(witnesses));
}

Certificate identity_endpoint(SequenceCache& seq, const IdentityBounds& b) {
  CoefficientEngine engine(seq);
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  for (long i = 1; i <= b.endpoint_i; ++i) {
    ++count;
    const TripleIndex idx(i, 2, 1);
    const Rational value = engine.b_closed_form(idx);
    const Rational expected(Integer(i), Integer(2) * Integer(i + 2) * Integer(i + 1));
    expect_equal(witnesses, i, 2, 1, value, expected, "b_(i,2,1) != i/(2(i+2)(i+1))");
  }
  return make_certificate("endpoint-formula", {{"i_max", b.endpoint_i}}, count,
                          std::move(witnesses));
}

Certificate identity_laurent(SequenceCache& seq, const IdentityBounds& b) {
  CoefficientEngine engine(seq);
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  const std::size_t ord = static_cast<std::size_t>(b.laurent_k + b.laurent_span) + 4;
  const PowerSeries g = generator_series(Generator::one_minus_exp, ord);
  for (long k = 1; k <= b.laurent_k; ++k) {
    const PowerSeries f_k =
        pow(generator_series(Generator::neg_log_one_minus_over_s, ord),
            static_cast<unsigned long>(k));
    const PowerSeries composed = compose(f_k, g);
    for (long i = k + 1; i <= k + b.laurent_span; ++i) {
      ++count;
      // f_k(1-e^t) - sum_{r < i-k} d_(r+k,0,k) (1-e^t)^r must vanish to order
      // i-k; the d values come from the defining recurrence.
      PowerSeries remainder = composed;
      for (long r = 0; r < i - k; ++r) {
        const Rational d = engine.compute_d(TripleIndex(r + k, 0, k), Method::recurrence);
        remainder = remainder - d * pow(g, static_cast<unsigned long>(r));
      }
      long valuation = static_cast<long>(remainder.order()) + 1;  // zero series: beyond order
      for (std::size_t m = 0; m <= remainder.order(); ++m) {
        if (!remainder[m].is_zero()) {
          valuation = static_cast<long>(m);
          break;
        }
      }
      if (valuation < i - k) {
        witnesses.push_back({i, 0, k, remainder[static_cast<std::size_t>(valuation)].to_string(),
                             "remainder valuation " + std::to_string(valuation) +
                                 " below required " + std::to_string(i - k)});
      }
    }
  }
  return make_certificate("laurent-divisibility",
                          {{"k_max", b.laurent_k}, {"i_span", b.laurent_span}}, count,
                          std::move(witnesses));
}

Certificate identity_bernoulli_egf(SequenceCache& seq, const IdentityBounds& b) {
  (void)seq;
  const std::size_t ord = static_cast<std::size_t>(b.egf_order);
  const PowerSeries egf = generator_series(Generator::bernoulli_egf, ord);
  const PowerSeries expm1 = generator_series(Generator::exp_minus_one, ord);
  const PowerSeries product = egf * expm1;  // should be exactly t
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  for (std::size_t m = 0; m <= product.order(); ++m) {
    ++count;
    const Rational expected = m == 1 ? Rational(1) : Rational(0);
    if (product[m] != expected) {
      witnesses.push_back({0, 0, static_cast<long>(m), product[m].to_string(),
                           "(t/(e^t-1)) * (e^t-1) != t at this coefficient"});
    }
  }
  return make_certificate("bernoulli-egf-identity", {{"order", b.egf_order}}, count,
                          std::move(witnesses));
}

Certificate identity_series_ring(SequenceCache& seq, const IdentityBounds& b) {
  (void)seq;
  std::mt19937 rng(0xF4C0C0DE);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 20);
  std::uniform_int_distribution<std::size_t> ord(0, 8);
  auto random_series = [&](std::size_t order) {
    std::vector<Rational> v(order + 1);
    for (auto& c : v) c = Rational(num(rng), den(rng));
    return PowerSeries(std::move(v));
  };
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  auto expect = [&](bool ok, unsigned trial, const char* what) {
    ++count;
    if (!ok) witnesses.push_back({static_cast<long>(trial), 0, 0, "", what});
  };
  for (unsigned trial = 0; trial < b.ring_trials; ++trial) {
    const std::size_t order = ord(rng);
    const PowerSeries a = random_series(order);
    const PowerSeries s2 = random_series(order);
    const PowerSeries c = random_series(order);
    expect(a + s2 == s2 + a, trial, "addition must commute");
    expect((a + s2) + c == a + (s2 + c), trial, "addition must associate");
    expect(a * s2 == s2 * a, trial, "multiplication must commute");
    expect((a * s2) * c == a * (s2 * c), trial, "multiplication must associate");
    expect(a * (s2 + c) == a * s2 + a * c, trial, "multiplication must distribute");
    PowerSeries unit = s2;
    if (unit[0].is_zero()) unit = unit + Rational(1);
    expect(divide(a, unit) * unit == a, trial, "divide then multiply must round-trip");
    expect(divide(unit, unit) == PowerSeries::one(order), trial, "self-division must be one");
  }
  return make_certificate("series-ring-axioms", {{"trials", b.ring_trials}}, count,
                          std::move(witnesses));
}

Certificate identity_agreement(SequenceCache& seq, const IdentityBounds& b) {
  Certificate c = cross_validate_certificate(seq, b.agreement_i, b.agreement_j);
  return c;
}

struct IdentityEntry {
  const char* name;
  IdentityFn fn;
};

constexpr IdentityEntry kIdentities[] = {
    {"agreement", identity_agreement},
    {"vanishing", identity_vanishing},
    {"daehee", identity_daehee},
    {"higher-bernoulli", identity_higher_bernoulli},
    {"corlog", identity_corlog},
    {"endpoint", identity_endpoint},
    {"laurent", identity_laurent},
    {"bernoulli-egf", identity_bernoulli_egf},
    {"series-ring", identity_series_ring},
};

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kIdentities) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

Certificate run_identity(SequenceCache& seq, std::string_view name,
                         const IdentityBounds& bounds) {
  for (const auto& e : kIdentities) {
    if (name == e.name) return e.fn(seq, bounds);
  }
  throw std::invalid_argument("unknown identity: " + std::string(name));
}

std::vector<Certificate> verify_identities(SequenceCache& seq, const IdentityBounds& bounds) {
  std::vector<Certificate> certs;
  for (const auto& e : kIdentities) certs.push_back(e.fn(seq, bounds));
  return certs;
}

}  // namespace fanocoeff
