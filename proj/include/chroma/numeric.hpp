#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational parse_rational(std::string_view text);

bool is_integral(const Rational& q);

/// Throws std::domain_error when q is not an integer.
BigInt to_integer(const Rational& q);

BigInt factorial(int n);

}  // namespace chroma
