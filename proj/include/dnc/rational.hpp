#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dnc {

// Exact rational scalar. cpp_rational keeps gcd(num, den) = 1 and den > 0,
// which is exactly the invariant the engine needs.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace dnc
