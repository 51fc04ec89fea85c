#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tcr {

/// All token counts, fractions and valuations are exact rationals.
/// Threshold comparisons (gamma against 1+E, 1+delta') are equality
/// sensitive, so nothing in the library rounds before the boundary.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "42", "-1.28", "7/25" or "2.5e-3" into an exact rational.
/// Decimal text is exact: "1.28" becomes 32/25, not the nearest double.
/// Throws ConfigError on malformed input.
Rational parse_rational(std::string_view text);

/// Renders with exactly `precision` digits after the decimal point,
/// correctly rounded (ties away from zero). precision 0 drops the point.
std::string decimal_string(const Rational& value, int precision);

/// Lowest-terms "n/d" (or "n" when integral); used in traces alongside
/// the rounded decimal so no information is lost at the boundary.
std::string fraction_string(const Rational& value);

}  // namespace tcr
