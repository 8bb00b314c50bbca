#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace conering {

// Exact integer coefficients throughout. Positivity verdicts are only
// meaningful with unbounded arithmetic, so no fixed-width fallback exists.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace conering
