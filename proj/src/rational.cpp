#include "fourg/rational.hpp"

#include <stdexcept>

namespace fourg {

bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

std::string to_string(const Rational& q) {
  std::string s = boost::multiprecision::numerator(q).str();
  if (!is_integer(q))
    s += "/" + boost::multiprecision::denominator(q).str();
  return s;
}

Rational make_rational(long long num, long long den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

} // namespace fourg
