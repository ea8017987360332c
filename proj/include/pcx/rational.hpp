#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace pcx {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q", always normalized, denominator positive.
std::string to_string(const Rational& r);

// Accepts optional sign, "p" or "p/q". Throws syntax_error on anything else
// (including a zero denominator).
Rational rational_from_string(const std::string& s);

// Exact square root when r is a perfect square of a rational, nullopt for
// non-squares. Negative input throws bad_argument.
std::optional<Rational> sqrt_exact(const Rational& r);

double to_double(const Rational& r);

} // namespace pcx
