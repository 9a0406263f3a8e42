#ifndef FANOCOEFF_REPORT_HPP
#define FANOCOEFF_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fanocoeff/coefficients.hpp"
#include "fanocoeff/rational.hpp"

namespace fanocoeff {

// One term of the ch_j(H_i) expansion. T^m and ch_k(X) are opaque tokens;
// only the rational coefficient is computed. operator_order 0 means no
// operator, ch_index 0 the pure c_1 term.
struct ChernTerm {
  Rational coefficient;
  long operator_order = 0;
  long ch_index = 0;
  long c1_power = 0;
};

// ch_j(H_i) = -i c_1(L_i)^j/j!
//           + sum_{k=1}^{i-1} b_(i,j,k) T^k(ch_k(X)) c_1(L_i)^j
//           + sum_{k=i}^{i+j} b_(i,j,k) T^i(ch_k(X)) c_1(L_i)^(i+j-k).
// The first sum is empty when i = 1. Terms are stored k ascending, so the
// expansion always carries exactly i+j+1 terms including the leading one.
struct ChernExpansion {
  long i = 0;
  long j = 0;
  ChernTerm leading;             // coefficient -i/j!, c1_power j
  std::vector<ChernTerm> terms;  // index 0 <-> k = 1

  nlohmann::json to_json() const;
  std::string to_latex() const;
};

// Coefficients come from the engine (default method); zero coefficients are
// retained and flagged in the JSON form.
ChernExpansion render_chern_expansion(CoefficientEngine& engine, long i, long j,
                                      Method method = Method::closed_form);

}  // namespace fanocoeff

#endif
