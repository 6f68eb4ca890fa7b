#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace spinforge {

// Expression templates are disabled so that `auto x = a * b` in generic code
// always holds a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
// GMP rationals stay canonical: positive denominator, lowest terms.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

BigInt parse_bigint(std::string_view text);
// Accepts "p", "-p", "p/q"; result is reduced.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

}  // namespace spinforge
