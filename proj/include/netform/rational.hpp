#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace netform {

/// Exact arithmetic for costs and utilities. Utilities have denominators that
/// divide |T| times the cost denominators, so 64-bit parts are ample.
using Rational = boost::rational<std::int64_t>;

/// Accepts "p/q", a plain integer, or a finite decimal such as "2.5".
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace netform
