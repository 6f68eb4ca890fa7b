#pragma once

#include "spinforge/coeff/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace spinforge {

// Element c0 + c1 z + c2 z^2 + c3 z^3 of Q(zeta_8), reduced by z^4 = -1.
// Contains sqrt(2) = z - z^3, i = z^2 and sqrt(-2) = z + z^3.
class Cyclo8 {
 public:
  Cyclo8() = default;
  Cyclo8(Rational c0) : c_{std::move(c0), 0, 0, 0} {}  // NOLINT(implicit)
  Cyclo8(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyclo8 zeta() { return {0, 1, 0, 0}; }
  static Cyclo8 sqrt2() { return {0, 1, 0, -1}; }
  static Cyclo8 imag() { return {0, 0, 1, 0}; }

  const Rational& operator[](int k) const { return c_[k]; }
  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  // Field automorphism z -> z^k for k in {1, 3, 5, 7}.
  Cyclo8 galois(int k) const;

  friend bool operator==(const Cyclo8&, const Cyclo8&) = default;
  friend Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b);
  friend Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b);
  friend Cyclo8 operator-(const Cyclo8& a);
  friend Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b);
  Cyclo8& operator+=(const Cyclo8& b) { return *this = *this + b; }
  Cyclo8& operator-=(const Cyclo8& b) { return *this = *this - b; }
  Cyclo8& operator*=(const Cyclo8& b) { return *this = *this * b; }

 private:
  std::array<Rational, 4> c_{};
};

// The rationals as a coefficient field.
class RationalField {
 public:
  using value_type = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(std::int64_t k) const { return k; }
  std::optional<Rational> inv(const Rational& a) const;
  // Nonnegative root when a is a rational square.
  std::optional<Rational> sqrt(const Rational& a) const;
  std::string to_string(const Rational& a) const { return spinforge::to_string(a); }
  Rational parse(std::string_view text) const { return parse_rational(text); }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

class Cyclo8Field {
 public:
  using value_type = Cyclo8;

  Cyclo8 zero() const { return {}; }
  Cyclo8 one() const { return Cyclo8(1); }
  Cyclo8 from_int(std::int64_t k) const { return Cyclo8(Rational(k)); }
  Cyclo8 from_rational(const Rational& q) const { return Cyclo8(q); }
  // Inverse through the norm x * sigma3(x) * sigma5(x) * sigma7(x).
  std::optional<Cyclo8> inv(const Cyclo8& a) const;
  // Square roots of rational arguments (which always exist here up to the
  // classes Q^2, 2Q^2, -Q^2, -2Q^2). The root with positive leading rational
  // coefficient is returned. Non-rational arguments raise UnsupportedRing.
  std::optional<Cyclo8> sqrt(const Cyclo8& a) const;
  // "1+z^2", "1/2*z-1/2*z^3", "0".
  std::string to_string(const Cyclo8& a) const;
  Cyclo8 parse(std::string_view text) const;
  std::string name() const { return "Q(zeta8)"; }
  bool operator==(const Cyclo8Field&) const = default;
};

}  // namespace spinforge
