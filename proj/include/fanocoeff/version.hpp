#ifndef FANOCOEFF_VERSION_HPP
#define FANOCOEFF_VERSION_HPP

namespace fanocoeff {

inline constexpr const char* kToolName = "fanocoeff";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace fanocoeff

#endif
