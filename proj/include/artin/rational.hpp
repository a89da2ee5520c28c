#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace artin {

/// Exact rational number. Angles and curvatures are stored as multiples of pi.
using Rational = boost::rational<std::int64_t>;
// Boost 1.74 under C++20: `r == 1` recurses forever through the rewritten
// reversed operator. Compare against Rational(1) instead.

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace artin
