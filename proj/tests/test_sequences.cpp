#include <doctest.h>

#include <vector>

#include "fanocoeff/sequences.hpp"

using namespace fanocoeff;

TEST_SUITE("sequences") {
  TEST_CASE("first Bernoulli numbers") {
    SequenceCache seq;
    CHECK(seq.bernoulli(0) == Rational(1));
    CHECK(seq.bernoulli(1) == Rational(-1, 2));
    CHECK(seq.bernoulli(2) == Rational(1, 6));
    CHECK(seq.bernoulli(3) == Rational(0));
    CHECK(seq.bernoulli(12) == Rational(-691, 2730));
  }

  TEST_CASE("series path matches the recurrence oracle") {
    SequenceCache seq;
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(seq.bernoulli(n) == bernoulli_by_recurrence(n));
    }
  }

  TEST_CASE("odd Bernoulli numbers vanish") {
    SequenceCache seq;
    for (std::size_t m = 1; m <= 14; ++m) {
      CHECK(seq.bernoulli(2 * m + 1) == Rational(0));
    }
  }

  TEST_CASE("higher-order Bernoulli numbers") {
    SequenceCache seq;
    for (std::size_t i = 1; i <= 5; ++i) CHECK(seq.higher_bernoulli(0, i) == Rational(1));
    CHECK(seq.higher_bernoulli(1, 2) == Rational(-1));
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(seq.higher_bernoulli(n, 1) == seq.bernoulli(n));
    }
  }

  TEST_CASE("higher order refines by Cauchy product") {
    SequenceCache seq;
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t n = 0; n <= 8; ++n) {
        Rational conv;
        for (std::size_t a = 0; a <= n; ++a) {
          conv += (seq.higher_bernoulli(a, i) / Rational(factorial(a))) *
                  (seq.bernoulli(n - a) / Rational(factorial(n - a)));
        }
        CHECK(seq.higher_bernoulli(n, i + 1) == conv * Rational(factorial(n)));
      }
    }
  }

  TEST_CASE("Daehee numbers") {
    SequenceCache seq;
    for (std::size_t k = 1; k <= 5; ++k) CHECK(seq.daehee(0, k) == Rational(1));
    CHECK(seq.daehee(1, 1) == Rational(-1, 2));
    CHECK(seq.daehee(2, 1) == Rational(2, 3));
  }

  TEST_CASE("Stirling numbers of the second kind") {
    SequenceCache seq;
    CHECK(seq.stirling2(0, 0) == 1);
    CHECK(seq.stirling2(1, 0) == 0);
    CHECK(seq.stirling2(2, 0) == 0);
    CHECK(seq.stirling2(1, 1) == 1);
    CHECK(seq.stirling2(2, 1) == 1);
    CHECK(seq.stirling2(2, 2) == 1);
    CHECK(seq.stirling2(3, 2) == 3);
    CHECK_THROWS_AS(seq.stirling2(2, 3), std::domain_error);
  }

  TEST_CASE("stirling recurrence equals the generating-function path") {
    SequenceCache seq;
    for (std::size_t j = 0; j <= 14; ++j) {
      for (std::size_t p = 0; p <= j; ++p) {
        CHECK(seq.stirling2(j, p) == stirling2_by_series(j, p));
      }
    }
  }

  TEST_CASE("stirling row sums grow monotonically") {
    SequenceCache seq;
    Integer prev(0);
    for (std::size_t j = 1; j <= 12; ++j) {
      Integer bell(0);
      for (std::size_t p = 0; p <= j; ++p) bell += seq.stirling2(j, p);
      CHECK(bell > prev);
      prev = bell;
    }
  }

  TEST_CASE("harmonic product sums: anchors") {
    SequenceCache seq;
    for (std::size_t k = 1; k <= 6; ++k) CHECK(seq.harmonic_product_sum(k, 0) == Rational(1));
    CHECK(seq.harmonic_product_sum(2, 1) == Rational(1));
    CHECK(seq.harmonic_product_sum(2, 2) == Rational(11, 12));
    for (std::size_t q = 0; q <= 20; ++q) {
      CHECK(seq.harmonic_product_sum(1, q) == Rational(1, static_cast<long>(q + 1)));
    }
  }

  TEST_CASE("convolution equals composition enumeration") {
    SequenceCache seq;
    for (std::size_t k = 1; k <= 6; ++k) {
      for (std::size_t q = 0; q <= 8; ++q) {
        CHECK(seq.harmonic_product_sum(k, q) == harmonic_sum_by_enumeration(k, q));
      }
    }
  }

  TEST_CASE("enumeration oracle is gated to small inputs") {
    CHECK_THROWS_AS(harmonic_sum_by_enumeration(20, 30), std::domain_error);
  }

  TEST_CASE("multinomial coefficients") {
    CHECK(multinomial(3, {3}) == 1);
    CHECK(multinomial(2, {1, 1}) == 2);
    CHECK(multinomial(4, {2, 1, 1}) == 12);
    CHECK(multinomial(0, {}) == 1);
    CHECK_THROWS_AS(multinomial(4, {2, 1}), std::domain_error);
  }

  TEST_CASE("cache audit: committed entries equal fresh recomputation") {
    SequenceCache warmed;
    // touch entries in a scattered order to exercise extension paths
    warmed.bernoulli(25);
    warmed.harmonic_product_sum(5, 12);
    warmed.stirling2(10, 4);
    warmed.bernoulli(3);
    warmed.harmonic_product_sum(2, 20);

    SequenceCache fresh;
    for (std::size_t n = 0; n <= 25; ++n) CHECK(warmed.bernoulli(n) == fresh.bernoulli(n));
    for (std::size_t k = 1; k <= 5; ++k) {
      for (std::size_t q = 0; q <= 12; ++q) {
        CHECK(warmed.harmonic_product_sum(k, q) == fresh.harmonic_product_sum(k, q));
      }
    }
    for (std::size_t j = 0; j <= 10; ++j) {
      for (std::size_t p = 0; p <= j; ++p) {
        CHECK(warmed.stirling2(j, p) == fresh.stirling2(j, p));
      }
    }
  }

  TEST_CASE("invalid orders") {
    SequenceCache seq;
    CHECK_THROWS_AS(seq.higher_bernoulli(1, 0), std::domain_error);
    CHECK_THROWS_AS(seq.daehee(1, 0), std::domain_error);
    CHECK_THROWS_AS(seq.harmonic_product_sum(0, 1), std::domain_error);
  }
}
