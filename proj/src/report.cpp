#include "fanocoeff/report.hpp"

#include <stdexcept>

namespace fanocoeff {

namespace {

// "-2", "1/3" -> "-2", "\frac{1}{3}" with the sign pulled out front.
std::string latex_number(const Rational& r) {
  const Rational mag = r.sign() < 0 ? -r : r;
  std::string body;
  if (mag.denominator() == 1) {
    body = mag.numerator().get_str();
  } else {
    body = "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
  }
  return (r.sign() < 0 ? "-" : "") + body;
}

std::string c1_latex(long i, long power) {
  if (power == 0) return "";
  std::string s = "c_1(L_{" + std::to_string(i) + "})";
  if (power > 1) s += "^{" + std::to_string(power) + "}";
  return s;
}

}  // namespace

ChernExpansion render_chern_expansion(CoefficientEngine& engine, long i, long j,
                                      Method method) {
  if (i < 1 || j < 1) {
    throw std::domain_error("render_chern_expansion: requires i >= 1, j >= 1");
  }
  ChernExpansion e;
  e.i = i;
  e.j = j;
  e.leading = ChernTerm{Rational(Integer(-i), factorial(static_cast<unsigned long>(j))),
                        0, 0, j};
  e.terms.reserve(static_cast<std::size_t>(i + j));
  for (long k = 1; k <= i + j; ++k) {
    const Rational coeff = engine.b(TripleIndex(i, j, k), method);
    if (k < i) {
      e.terms.push_back(ChernTerm{coeff, k, k, j});
    } else {
      e.terms.push_back(ChernTerm{coeff, i, k, i + j - k});
    }
  }
  return e;
}

nlohmann::json ChernExpansion::to_json() const {
  nlohmann::json term_array = nlohmann::json::array();
  for (std::size_t idx = 0; idx < terms.size(); ++idx) {
    const ChernTerm& t = terms[idx];
    term_array.push_back({{"k", static_cast<long>(idx) + 1},
                          {"coefficient", t.coefficient.to_string()},
                          {"operator_order", t.operator_order},
                          {"ch_index", t.ch_index},
                          {"c1_power", t.c1_power},
                          {"zero", t.coefficient.is_zero()}});
  }
  return {{"i", i},
          {"j", j},
          {"leading", {{"coefficient", leading.coefficient.to_string()}}},
          {"terms", term_array}};
}

std::string ChernExpansion::to_latex() const {
  std::string out = "\\mathrm{ch}_{" + std::to_string(j) + "}(H_{" + std::to_string(i) +
                    "}) = " + latex_number(leading.coefficient);
  const std::string leading_c1 = c1_latex(i, leading.c1_power);
  if (!leading_c1.empty()) out += "\\," + leading_c1;
  for (std::size_t idx = 0; idx < terms.size(); ++idx) {
    const ChernTerm& t = terms[idx];
    const bool negative = t.coefficient.sign() < 0;
    out += negative ? " - " : " + ";
    const Rational mag = negative ? -t.coefficient : t.coefficient;
    out += latex_number(mag);
    out += "\\,T^{" + std::to_string(t.operator_order) + "}(\\mathrm{ch}_{" +
           std::to_string(t.ch_index) + "}(X))";
    const std::string c1 = c1_latex(i, t.c1_power);
    if (!c1.empty()) out += "\\," + c1;
  }
  return out;
}

}  // namespace fanocoeff
