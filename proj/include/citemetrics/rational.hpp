#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace citemetrics {

// Exact rational arithmetic for fractional citation credit. Threshold
// comparisons in the h-family indices must be exact, so values never touch
// floating point until a caller explicitly asks for a real.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "27", "-3", "11/4", or a plain decimal such as "2.75".
Rational parse_rational(const std::string& text);

/// "11/4" for non-integers, "27" for integers.
std::string rational_to_string(const Rational& r);

}  // namespace citemetrics
