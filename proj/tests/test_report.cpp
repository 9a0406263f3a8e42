#include <doctest.h>

#include <string>

#include "fanocoeff/report.hpp"
#include "fanocoeff/sequences.hpp"

using namespace fanocoeff;

TEST_SUITE("report") {
  TEST_CASE("expansion of ch_1(H_1)") {
    SequenceCache seq;
    CoefficientEngine engine(seq);
    const ChernExpansion e = render_chern_expansion(engine, 1, 1);
    CHECK(e.leading.coefficient == Rational(-1));
    CHECK(e.leading.c1_power == 1);
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms[0].coefficient == Rational(1, 2));  // b_(1,1,1)
    CHECK(e.terms[0].operator_order == 1);
    CHECK(e.terms[0].ch_index == 1);
    CHECK(e.terms[0].c1_power == 1);
    CHECK(e.terms[1].coefficient == Rational(1));  // b_(1,1,2)
    CHECK(e.terms[1].operator_order == 1);
    CHECK(e.terms[1].c1_power == 0);
  }

  TEST_CASE("expansion of ch_1(H_2)") {
    SequenceCache seq;
    CoefficientEngine engine(seq);
    const ChernExpansion e = render_chern_expansion(engine, 2, 1);
    CHECK(e.leading.coefficient == Rational(-2));
    REQUIRE(e.terms.size() == 3);
    // k = 1 < i: operator T^1, c_1 stays at power j
    CHECK(e.terms[0].coefficient == Rational(1, 3));
    CHECK(e.terms[0].operator_order == 1);
    CHECK(e.terms[0].c1_power == 1);
    // k = 2, 3 >= i: operator T^2
    CHECK(e.terms[1].operator_order == 2);
    CHECK(e.terms[1].c1_power == 1);
    CHECK(e.terms[2].operator_order == 2);
    CHECK(e.terms[2].c1_power == 0);
  }

  TEST_CASE("term count and coefficient equality across a grid") {
    SequenceCache seq;
    CoefficientEngine engine(seq);
    for (long i = 1; i <= 5; ++i) {
      for (long j = 1; j <= 4; ++j) {
        const ChernExpansion e = render_chern_expansion(engine, i, j);
        CHECK(e.terms.size() == static_cast<std::size_t>(i + j));  // plus leading = i+j+1
        for (long k = 1; k <= i + j; ++k) {
          const ChernTerm& t = e.terms[static_cast<std::size_t>(k - 1)];
          CHECK(t.coefficient == engine.b(TripleIndex(i, j, k), Method::closed_form));
          CHECK(t.ch_index == k);
          if (k < i) {
            CHECK(t.operator_order == k);
            CHECK(t.c1_power == j);
          } else {
            CHECK(t.operator_order == i);
            CHECK(t.c1_power == i + j - k);
          }
        }
      }
    }
  }

  TEST_CASE("json shape and zero flag") {
    SequenceCache seq;
    CoefficientEngine engine(seq);
    const nlohmann::json j = render_chern_expansion(engine, 2, 1).to_json();
    CHECK(j["i"] == 2);
    CHECK(j["j"] == 1);
    CHECK(j["leading"]["coefficient"] == "-2");
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["k"] == 1);
    CHECK(j["terms"][0]["coefficient"] == "1/3");
    CHECK(j["terms"][0]["operator_order"] == 1);
    CHECK(j["terms"][0]["ch_index"] == 1);
    CHECK(j["terms"][0]["c1_power"] == 1);
    CHECK(j["terms"][0]["zero"] == false);
  }

  TEST_CASE("latex carries the same terms as the json form") {
    SequenceCache seq;
    CoefficientEngine engine(seq);
    const ChernExpansion e = render_chern_expansion(engine, 1, 1);
    const std::string latex = e.to_latex();
    const nlohmann::json j = e.to_json();
    CHECK(latex.find("\\mathrm{ch}_{1}(H_{1})") != std::string::npos);
    CHECK(latex.find("-1\\,c_1(L_{1})") != std::string::npos);
    CHECK(latex.find("\\frac{1}{2}\\,T^{1}(\\mathrm{ch}_{1}(X))\\,c_1(L_{1})") !=
          std::string::npos);
    CHECK(latex.find("1\\,T^{1}(\\mathrm{ch}_{2}(X))") != std::string::npos);
    CHECK(j["terms"].size() == 2);
  }

  TEST_CASE("zero coefficients are retained and flagged") {
    SequenceCache seq;
    CoefficientEngine engine(seq);
    // b_(1,3,1) = -B_3/3! = 0: possible once j >= 3
    const ChernExpansion e = render_chern_expansion(engine, 1, 3);
    REQUIRE(e.terms.size() == 4);
    CHECK(e.terms[0].coefficient.is_zero());
    const nlohmann::json j = e.to_json();
    CHECK(j["terms"][0]["zero"] == true);
    CHECK(j["terms"][0]["coefficient"] == "0");
    CHECK(j["terms"][3]["zero"] == false);
  }

  TEST_CASE("domain validation") {
    SequenceCache seq;
    CoefficientEngine engine(seq);
    CHECK_THROWS_AS(render_chern_expansion(engine, 0, 1), std::domain_error);
    CHECK_THROWS_AS(render_chern_expansion(engine, 1, 0), std::domain_error);
  }
}
