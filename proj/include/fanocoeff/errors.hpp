#ifndef FANOCOEFF_ERRORS_HPP
#define FANOCOEFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fanocoeff {

// Division by an exactly-zero rational.
struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Series division where the divisor has a zero constant term. The caller
// should valuation_split both operands and subtract valuations instead.
struct ValuationError : std::domain_error {
  explicit ValuationError(const std::string& what) : std::domain_error(what) {}
};

// valuation_split of a series that is zero up to its truncation order.
struct ZeroSeriesError : std::domain_error {
  explicit ZeroSeriesError(const std::string& what) : std::domain_error(what) {}
};

// Composition f(g) where g has a nonzero constant term.
struct CompositionError : std::domain_error {
  explicit CompositionError(const std::string& what) : std::domain_error(what) {}
};

// A value that the underlying theory guarantees failed to hold. Always a bug,
// never a data error: e.g. two methods writing different values for the same
// index, or a generating-function iteration step with an impossible constant
// term.
struct InternalInconsistency : std::logic_error {
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fanocoeff

#endif
