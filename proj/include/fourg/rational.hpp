#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fourg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_integer(const Rational& q);
// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational make_rational(long long num, long long den = 1);

} // namespace fourg
