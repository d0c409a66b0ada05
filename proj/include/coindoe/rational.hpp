#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coindoe {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or a bare integer "p". Throws ParseError on anything else
// (including a zero denominator).
Rational parse_rational(std::string_view text);

// Always "p/q" in lowest terms, q > 0 (so 1 prints as "1/1").
std::string format_rational(const Rational& value);

}  // namespace coindoe
