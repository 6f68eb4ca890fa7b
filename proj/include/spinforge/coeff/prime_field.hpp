#pragma once

#include "spinforge/coeff/modular.hpp"
#include "spinforge/error.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spinforge {

// Residue modulo an odd prime. Moduli are limited to 64 bits; every search the
// library performs stays far below that.
struct FpElem {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 0;

  FpElem() = default;
  FpElem(std::uint64_t r, std::uint64_t p) : residue(p ? r % p : r), modulus(p) {}

  bool is_zero() const { return residue == 0; }
  friend bool operator==(const FpElem&, const FpElem&) = default;
};

namespace detail {
inline void require_same_modulus(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw InvalidModulus("residues with different moduli combined");
}
}  // namespace detail

inline FpElem operator+(const FpElem& a, const FpElem& b) {
  detail::require_same_modulus(a.modulus, b.modulus);
  return {detail::add_mod(a.residue, b.residue, a.modulus), a.modulus};
}
inline FpElem operator-(const FpElem& a, const FpElem& b) {
  detail::require_same_modulus(a.modulus, b.modulus);
  return {detail::sub_mod(a.residue, b.residue, a.modulus), a.modulus};
}
inline FpElem operator-(const FpElem& a) {
  return {a.residue == 0 ? 0 : a.modulus - a.residue, a.modulus};
}
inline FpElem operator*(const FpElem& a, const FpElem& b) {
  detail::require_same_modulus(a.modulus, b.modulus);
  return {detail::mul_mod(a.residue, b.residue, a.modulus), a.modulus};
}
inline FpElem& operator+=(FpElem& a, const FpElem& b) { return a = a + b; }
inline FpElem& operator-=(FpElem& a, const FpElem& b) { return a = a - b; }
inline FpElem& operator*=(FpElem& a, const FpElem& b) { return a = a * b; }

FpElem pow(const FpElem& a, std::uint64_t e);

// The prime field F_p.
class PrimeField {
 public:
  using value_type = FpElem;

  // Throws InvalidModulus unless p is an odd prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  FpElem zero() const { return {0, p_}; }
  FpElem one() const { return {1, p_}; }
  FpElem from_int(std::int64_t k) const;
  std::optional<FpElem> inv(const FpElem& a) const;
  std::optional<FpElem> sqrt(const FpElem& a) const;
  std::string to_string(const FpElem& a) const;  // "18 mod 41"
  FpElem parse(std::string_view text) const;
  std::string name() const;
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

// Element a + b*t of F_p(t), t^2 = d with d a fixed nonresidue.
struct Fp2Elem {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t modulus = 0;
  std::uint64_t nonresidue = 0;

  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const Fp2Elem&, const Fp2Elem&) = default;
};

Fp2Elem operator+(const Fp2Elem& x, const Fp2Elem& y);
Fp2Elem operator-(const Fp2Elem& x, const Fp2Elem& y);
Fp2Elem operator-(const Fp2Elem& x);
Fp2Elem operator*(const Fp2Elem& x, const Fp2Elem& y);
inline Fp2Elem& operator+=(Fp2Elem& a, const Fp2Elem& b) { return a = a + b; }
inline Fp2Elem& operator-=(Fp2Elem& a, const Fp2Elem& b) { return a = a - b; }
inline Fp2Elem& operator*=(Fp2Elem& a, const Fp2Elem& b) { return a = a * b; }

// Quadratic extension F_{p^2} = F_p(sqrt(d)), d the smallest quadratic nonresidue.
// Every element of F_p has a square root here, so it backs Weyl lifts when
// sqrt(2) or sqrt(-1) is missing from F_p.
class PrimeField2 {
 public:
  using value_type = Fp2Elem;

  explicit PrimeField2(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t nonresidue() const { return d_; }
  Fp2Elem zero() const { return {0, 0, p_, d_}; }
  Fp2Elem one() const { return {1, 0, p_, d_}; }
  Fp2Elem from_int(std::int64_t k) const;
  Fp2Elem make(std::uint64_t a, std::uint64_t b) const { return {a % p_, b % p_, p_, d_}; }
  std::optional<Fp2Elem> inv(const Fp2Elem& x) const;
  // Root with the lexicographically smaller (a, b) pair.
  std::optional<Fp2Elem> sqrt(const Fp2Elem& x) const;
  std::string to_string(const Fp2Elem& x) const;  // "3+5*t mod 13"
  Fp2Elem parse(std::string_view text) const;
  std::string name() const;
  bool operator==(const PrimeField2&) const = default;

 private:
  std::uint64_t p_;
  std::uint64_t d_;
};

}  // namespace spinforge
