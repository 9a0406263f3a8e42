#include <doctest.h>

#include <set>
#include <string>

#include "fanocoeff/coefficients.hpp"
#include "fanocoeff/sequences.hpp"
#include "fanocoeff/verify.hpp"

using namespace fanocoeff;

namespace {

nlohmann::json json_without_timestamp(const Certificate& c) {
  nlohmann::json j = c.to_json();
  j.erase("produced_at");
  return j;
}

IdentityBounds small_bounds() {
  IdentityBounds b;
  b.vanishing_i = 4;
  b.vanishing_j = 4;
  b.daehee_q = 5;
  b.daehee_k = 3;
  b.hob_i = 4;
  b.hob_j = 4;
  b.corlog_k = 3;
  b.corlog_q = 5;
  b.endpoint_i = 20;
  b.laurent_k = 2;
  b.laurent_span = 3;
  b.agreement_i = 4;
  b.agreement_j = 3;
  b.egf_order = 10;
  b.ring_trials = 5;
  return b;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("certify N=2 covers exactly the five base coefficients") {
    SequenceCache seq;
    const Certificate cert = certify_positivity(seq, 2, Method::closed_form);
    CHECK(cert.pass);
    CHECK(cert.checked_count == 5);
    CHECK(cert.witnesses.empty());
    CHECK(cert.property == "positivity");
    CHECK(cert.file_stem() == "certify-N2-closed");
  }

  TEST_CASE("certify count equals the declared range cardinality") {
    SequenceCache seq;
    const long n = 20;
    const Certificate cert = certify_positivity(seq, n, Method::closed_form);
    CHECK(cert.pass);
    std::uint64_t expected = 0;
    for (long i = 1; i < n; ++i) expected += static_cast<std::uint64_t>((i + 1) + (i + 2));
    CHECK(cert.checked_count == expected);
  }

  TEST_CASE("all three methods certify a small range") {
    SequenceCache seq;
    for (Method m : {Method::closed_form, Method::recurrence, Method::genfunc}) {
      const Certificate cert = certify_positivity(seq, 12, m);
      CHECK(cert.pass);
    }
  }

  TEST_CASE("shard independence") {
    SequenceCache seq1, seq4;
    const Certificate one = certify_positivity(seq1, 30, Method::closed_form, 1);
    const Certificate four = certify_positivity(seq4, 30, Method::closed_form, 4);
    CHECK(json_without_timestamp(one) == json_without_timestamp(four));
  }

  TEST_CASE("determinism modulo timestamp") {
    SequenceCache seq;
    const Certificate a = certify_positivity(seq, 15, Method::closed_form);
    const Certificate b = certify_positivity(seq, 15, Method::closed_form);
    CHECK(json_without_timestamp(a).dump() == json_without_timestamp(b).dump());
  }

  TEST_CASE("monotone coverage") {
    SequenceCache seq;
    const Certificate small = certify_positivity(seq, 10, Method::closed_form);
    const Certificate large = certify_positivity(seq, 25, Method::closed_form);
    CHECK(large.checked_count > small.checked_count);

    // under an injected fault both fail, and every small witness persists in
    // the larger run
    SequenceCache bad1, bad2;
    bad1.inject_bernoulli(1, Rational(1, 2));
    bad2.inject_bernoulli(1, Rational(1, 2));
    const Certificate f_small = certify_positivity(bad1, 4, Method::recurrence);
    const Certificate f_large = certify_positivity(bad2, 8, Method::recurrence);
    CHECK_FALSE(f_small.pass);
    CHECK_FALSE(f_large.pass);
    std::set<std::string> large_keys;
    for (const auto& w : f_large.witnesses) {
      large_keys.insert(std::to_string(w.i) + "," + std::to_string(w.j) + "," +
                        std::to_string(w.k));
    }
    for (const auto& w : f_small.witnesses) {
      CHECK(large_keys.count(std::to_string(w.i) + "," + std::to_string(w.j) + "," +
                             std::to_string(w.k)) == 1);
    }
  }

  TEST_CASE("certificate json schema") {
    SequenceCache seq;
    const Certificate cert = certify_positivity(seq, 5, Method::closed_form);
    const nlohmann::json j = cert.to_json();
    CHECK(j.contains("claim"));
    CHECK(j["claim"].contains("property"));
    CHECK(j["claim"].contains("params"));
    CHECK(j["verdict"] == "pass");
    CHECK(j["checked_count"].get<std::uint64_t>() == cert.checked_count);
    CHECK(j["witnesses"].is_array());
    CHECK(j["witnesses"].empty());
    CHECK(j.contains("produced_at"));
    CHECK(j["tool_version"].get<std::string>().starts_with("fanocoeff"));
  }

  TEST_CASE("witness schema on failure") {
    SequenceCache seq;
    seq.inject_bernoulli(1, Rational(1, 2));
    const Certificate cert = certify_positivity(seq, 3, Method::recurrence);
    CHECK_FALSE(cert.pass);
    REQUIRE(!cert.witnesses.empty());
    const nlohmann::json w = cert.to_json()["witnesses"][0];
    CHECK(w.contains("i"));
    CHECK(w.contains("j"));
    CHECK(w.contains("k"));
    CHECK(w.contains("value"));
    CHECK(w.contains("reason"));
  }

  TEST_CASE("cross validation certificate") {
    SequenceCache seq;
    const Certificate cert = cross_validate_certificate(seq, 4, 3);
    CHECK(cert.pass);
    CHECK(cert.property == "three-method-agreement");
    const Certificate minimal = cross_validate_certificate(seq, 1, 1);
    CHECK(minimal.pass);
  }

  TEST_CASE("identity suite passes on small bounds") {
    SequenceCache seq;
    for (const auto& cert : verify_identities(seq, small_bounds())) {
      INFO(cert.property);
      CHECK(cert.pass);
      CHECK(cert.checked_count > 0);
      CHECK((cert.pass == cert.witnesses.empty()));
    }
  }

  TEST_CASE("identity registry") {
    CHECK(identity_names().size() == 9);
    SequenceCache seq;
    CHECK_THROWS_AS(run_identity(seq, "not-an-identity", small_bounds()),
                    std::invalid_argument);
  }

  TEST_CASE("a planted wrong B_1 must produce witnesses") {
    SequenceCache seq;
    seq.inject_bernoulli(1, Rational(1, 2));  // sign flipped
    const IdentityBounds b = small_bounds();

    const Certificate daehee = run_identity(seq, "daehee", b);
    CHECK_FALSE(daehee.pass);
    CHECK(daehee.witnesses.size() >= 1);

    const Certificate agreement = run_identity(seq, "agreement", b);
    CHECK_FALSE(agreement.pass);

    std::size_t total_witnesses = 0;
    for (const auto& cert : verify_identities(seq, b)) {
      total_witnesses += cert.witnesses.size();
    }
    CHECK(total_witnesses >= 1);
  }
}
