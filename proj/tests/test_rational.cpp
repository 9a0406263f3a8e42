#include <doctest.h>

#include <random>

#include "fanocoeff/errors.hpp"
#include "fanocoeff/rational.hpp"

using namespace fanocoeff;

TEST_SUITE("rational") {
  TEST_CASE("small fraction arithmetic") {
    CHECK(Rational(1, 6) + Rational(-1, 2) == Rational(-1, 3));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK(compare(Rational(1, 12), Rational(0)) == std::strong_ordering::greater);
  }

  TEST_CASE("canonical form") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-6, 8).to_string() == "-3/4");
    CHECK(Rational(3, -9).to_string() == "-1/3");  // sign moves to the numerator
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(14, 7).to_string() == "2");
    CHECK(Rational(5, 1).denominator() == 1);
    CHECK(Rational(4, 6).numerator() == 2);
    CHECK(Rational(4, 6).denominator() == 3);
  }

  TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZero);
    CHECK_THROWS_AS(Rational::from_string("1/0"), DivisionByZero);
  }

  TEST_CASE("parsing") {
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("6/8") == Rational(3, 4));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK(Rational::from_string("-691/2730").to_string() == "-691/2730");
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  }

  TEST_CASE("serialize/parse round-trips bit-exactly") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    for (int trial = 0; trial < 500; ++trial) {
      const Rational r(num(rng), den(rng));
      const Rational back = Rational::from_string(r.to_string());
      CHECK(back == r);
      CHECK(back.to_string() == r.to_string());
    }
  }

  TEST_CASE("ring properties on random values") {
    std::mt19937 rng(98765);
    std::uniform_int_distribution<long> num(-200, 200);
    std::uniform_int_distribution<long> den(1, 60);
    auto random_rational = [&] { return Rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 500; ++trial) {
      const Rational a = random_rational(), b = random_rational(), c = random_rational();
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a - a == Rational(0));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("comparison agrees with the cross-multiplication sign") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 99);
    for (int trial = 0; trial < 500; ++trial) {
      const Rational a(num(rng), den(rng));
      const Rational b(num(rng), den(rng));
      const Integer lhs = a.numerator() * b.denominator() - b.numerator() * a.denominator();
      const auto expected = sgn(lhs) <=> 0;
      CHECK(compare(a, b) == expected);
    }
  }

  TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 0) == 1);
  }
}
