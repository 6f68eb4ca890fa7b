#pragma once

#include "spinforge/coeff/cyclo8.hpp"
#include "spinforge/coeff/prime_field.hpp"
#include "spinforge/coeff/rational.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spinforge {

// A coefficient field is a small context object (it may carry a modulus) whose
// value_type supports + - * and unary -, with inverses, square roots and text
// conversion provided by the context. Four models: RationalField, Cyclo8Field,
// PrimeField and PrimeField2.
template <class F>
concept CoefficientField =
    std::equality_comparable<F> &&
    requires(const F& f, const typename F::value_type& a, std::int64_t k, std::string_view s) {
      { f.zero() } -> std::same_as<typename F::value_type>;
      { f.one() } -> std::same_as<typename F::value_type>;
      { f.from_int(k) } -> std::same_as<typename F::value_type>;
      { f.inv(a) } -> std::same_as<std::optional<typename F::value_type>>;
      { f.sqrt(a) } -> std::same_as<std::optional<typename F::value_type>>;
      { f.to_string(a) } -> std::same_as<std::string>;
      { f.parse(s) } -> std::same_as<typename F::value_type>;
      { f.name() } -> std::same_as<std::string>;
      { a + a } -> std::convertible_to<typename F::value_type>;
      { a - a } -> std::convertible_to<typename F::value_type>;
      { a * a } -> std::convertible_to<typename F::value_type>;
      { -a } -> std::convertible_to<typename F::value_type>;
      { a == a } -> std::convertible_to<bool>;
    };

template <CoefficientField F>
bool is_zero(const F& field, const typename F::value_type& a) {
  return a == field.zero();
}

template <CoefficientField F>
typename F::value_type require_inv(const F& field, const typename F::value_type& a) {
  auto r = field.inv(a);
  if (!r) throw UnsupportedRing("element " + field.to_string(a) + " is not invertible in " + field.name());
  return *r;
}

template <CoefficientField F>
typename F::value_type require_sqrt(const F& field, const typename F::value_type& a) {
  auto r = field.sqrt(a);
  if (!r) throw UnsupportedRing("no square root of " + field.to_string(a) + " in " + field.name());
  return *r;
}

template <CoefficientField F>
typename F::value_type power(const F& field, typename F::value_type base, std::int64_t exp) {
  if (exp < 0) {
    base = require_inv(field, base);
    exp = -exp;
  }
  auto result = field.one();
  while (exp > 0) {
    if (exp & 1) result = result * base;
    base = base * base;
    exp >>= 1;
  }
  return result;
}

}  // namespace spinforge
