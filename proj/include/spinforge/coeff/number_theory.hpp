#pragma once

#include "spinforge/coeff/prime_field.hpp"
#include "spinforge/coeff/rational.hpp"

#include <cstdint>
#include <optional>

namespace spinforge {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Inverse of a modulo m, absent when gcd(a, m) != 1.
std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m);
// Canonical residue of a signed integer.
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m);
std::uint64_t reduce_mod(const BigInt& a, std::uint64_t m);

// Deterministic Miller-Rabin; the witness set {2..37} is exact for all 64-bit n.
bool is_prime(std::uint64_t n);
// Exact below 2^64, 64 random-base Miller-Rabin rounds above (error < 2^-128).
bool is_prime(const BigInt& n);

// Legendre symbol (a|p) in {-1, 0, 1}. Throws InvalidModulus unless p is an odd prime.
int legendre(const BigInt& a, std::uint64_t p);
int legendre(std::int64_t a, std::uint64_t p);

// Square root in F_p; of the two roots the smaller canonical residue is returned.
std::optional<FpElem> sqrt_mod(const FpElem& a);

// Projection of F_p^x onto its l-torsion mu_l: x -> x^c with c = 0 mod (p-1)/l,
// c = 1 mod l. Requires l | p-1 and l^2 not dividing p-1.
FpElem mu_l_projection(const FpElem& x, std::uint64_t l);
// The CRT exponent c used by mu_l_projection.
std::uint64_t mu_l_exponent(std::uint64_t p, std::uint64_t l);

// Multiplicative order of a mod p (a != 0 mod p, p prime), found by trial over divisors of p-1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

// Smallest prime > n (n < 2^63).
std::uint64_t next_prime(std::uint64_t n);

}  // namespace spinforge
