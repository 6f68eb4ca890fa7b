#pragma once

#include "spinforge/coeff/field.hpp"
#include "spinforge/error.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinforge {

// Clifford algebra of the split form (x, y) = x_1 y_m + ... + x_m y_1 in the
// ordered basis e_1, ..., e_n, [u_0,] f_n, ..., f_1. Basis position k pairs
// with position m-1-k; u_0 (odd m only) sits in the middle and pairs with itself.

enum class GenKind { E, U0, F };

struct Generator {
  GenKind kind;
  int index;  // 1..n for E and F, 0 for U0

  static Generator e(int i) { return {GenKind::E, i}; }
  static Generator f(int i) { return {GenKind::F, i}; }
  static Generator u0() { return {GenKind::U0, 0}; }
  bool operator==(const Generator&) const = default;
};

// Canonical monomials are bitmasks over basis positions; bit k is set when the
// k-th generator of the total order E(1) < ... < E(n) < U0 < F(n) < ... < F(1)
// occurs. The empty mask is the unit.
using Mask = std::uint32_t;

constexpr int kMaxDimension = 31;

int position(Generator g, int m);
Generator generator_at(int pos, int m);
std::string generator_name(Generator g);
// Bilinear form on basis positions: 1 when a + b == m-1, else 0.
inline int basis_form(int a, int b, int m) { return a + b == m - 1 ? 1 : 0; }
void check_dimension(int m);

namespace detail {

struct Term {
  Mask mask;
  std::int64_t coeff;
};
using TermList = std::vector<Term>;

// Normal-ordered product of two canonical monomials; coefficients are integers
// because every contraction contributes 2 (e_i, f_i) = 2 or u_0^2 = 1.
const TermList& monomial_product(int m, Mask a, Mask b);
// (v_1 ... v_r)^* = (-1)^r v_r ... v_1, normal ordered.
const TermList& monomial_star(int m, Mask a);

}  // namespace detail

enum class GradeParity { Even, Odd, Mixed, Zero };
std::string to_string(GradeParity p);

template <CoefficientField F>
class MultiVector {
 public:
  using Value = typename F::value_type;

  MultiVector(F field, int m) : field_(std::move(field)), m_(m) { check_dimension(m); }

  static MultiVector scalar(const F& field, int m, const Value& c) {
    MultiVector out(field, m);
    out.add_term(0, c);
    return out;
  }
  static MultiVector one(const F& field, int m) { return scalar(field, m, field.one()); }
  static MultiVector generator(const F& field, int m, Generator g) {
    MultiVector out(field, m);
    out.add_term(Mask{1} << position(g, m), field.one());
    return out;
  }
  static MultiVector monomial(const F& field, int m, Mask mask, const Value& c) {
    MultiVector out(field, m);
    out.add_term(mask, c);
    return out;
  }
  // The vector sum_k coords[k] * b_k in the ordered basis.
  static MultiVector from_vector(const F& field, int m, std::span<const Value> coords) {
    if (static_cast<int>(coords.size()) != m) throw DimensionMismatch("vector length differs from m");
    MultiVector out(field, m);
    for (int k = 0; k < m; ++k) out.add_term(Mask{1} << k, coords[k]);
    return out;
  }

  const F& field() const { return field_; }
  int dimension() const { return m_; }
  int rank() const { return m_ / 2; }
  const std::map<Mask, Value>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  Value coefficient(Mask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? field_.zero() : it->second;
  }
  Value scalar_part() const { return coefficient(0); }

  void add_term(Mask mask, const Value& c) {
    if (m_ < 32 && (mask >> m_) != 0) throw DimensionMismatch("monomial uses a generator outside dimension m");
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  // Coordinates in the ordered basis when the element lies in V.
  std::optional<std::vector<Value>> vector_coordinates() const {
    std::vector<Value> coords(m_, field_.zero());
    for (const auto& [mask, c] : terms_) {
      if (std::popcount(mask) != 1) return std::nullopt;
      coords[std::countr_zero(mask)] = c;
    }
    return coords;
  }

  MultiVector& operator+=(const MultiVector& b) {
    require_compatible(b);
    for (const auto& [mask, c] : b.terms_) add_term(mask, c);
    return *this;
  }
  MultiVector& operator-=(const MultiVector& b) {
    require_compatible(b);
    for (const auto& [mask, c] : b.terms_) add_term(mask, -c);
    return *this;
  }
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator-(const MultiVector& a) {
    MultiVector out(a.field_, a.m_);
    for (const auto& [mask, c] : a.terms_) out.terms_.emplace(mask, -c);
    return out;
  }
  friend MultiVector operator*(const Value& s, const MultiVector& a) {
    MultiVector out(a.field_, a.m_);
    for (const auto& [mask, c] : a.terms_) out.add_term(mask, s * c);
    return out;
  }
  friend MultiVector operator*(const MultiVector& a, const MultiVector& b) {
    a.require_compatible(b);
    MultiVector out(a.field_, a.m_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const Value cab = ca * cb;
        for (const auto& t : detail::monomial_product(a.m_, ma, mb)) {
          out.add_term(t.mask, a.field_.from_int(t.coeff) * cab);
        }
      }
    }
    return out;
  }
  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.m_ == b.m_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  void require_compatible(const MultiVector& b) const {
    if (m_ != b.m_) throw DimensionMismatch("multivectors of different ambient dimension");
    if (!(field_ == b.field_)) throw DimensionMismatch("multivectors over different coefficient rings");
  }

 private:
  bool is_zero_value(const Value& c) const { return c == field_.zero(); }

  F field_;
  int m_;
  std::map<Mask, Value> terms_;
};

template <CoefficientField F>
MultiVector<F> mul(const MultiVector<F>& a, const MultiVector<F>& b) {
  return a * b;
}

// The anti-involution determined by (v_1 ... v_r)^* = (-1)^r v_r ... v_1.
template <CoefficientField F>
MultiVector<F> star(const MultiVector<F>& a) {
  MultiVector<F> out(a.field(), a.dimension());
  for (const auto& [mask, c] : a.terms()) {
    for (const auto& t : detail::monomial_star(a.dimension(), mask)) {
      out.add_term(t.mask, a.field().from_int(t.coeff) * c);
    }
  }
  return out;
}

template <CoefficientField F>
GradeParity grade_parity(const MultiVector<F>& a) {
  if (a.is_zero()) return GradeParity::Zero;
  bool even = false, odd = false;
  for (const auto& [mask, c] : a.terms()) {
    (std::popcount(mask) % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return GradeParity::Mixed;
  return even ? GradeParity::Even : GradeParity::Odd;
}

// g * g^*
template <CoefficientField F>
MultiVector<F> clifford_norm(const MultiVector<F>& g) {
  return g * star(g);
}

template <CoefficientField F>
MultiVector<F> power(const MultiVector<F>& g, int k) {
  auto out = MultiVector<F>::one(g.field(), g.dimension());
  for (int i = 0; i < k; ++i) out = out * g;
  return out;
}

// w_i = (e_i - f_i) / sqrt(2) for even m; omega_i = w_0 w_i with
// w_0 = sqrt(-1) u_0 for odd m. Either squares to -1.
template <CoefficientField F>
MultiVector<F> weyl_generator(const F& field, int i, int m) {
  check_dimension(m);
  const int n = m / 2;
  if (i < 1 || i > n) throw PreconditionError("Weyl generator index out of range");
  auto inv_sqrt2 = require_inv(field, require_sqrt(field, field.from_int(2)));
  auto w = inv_sqrt2 * (MultiVector<F>::generator(field, m, Generator::e(i)) -
                        MultiVector<F>::generator(field, m, Generator::f(i)));
  if (m % 2 == 0) return w;
  auto sqrt_minus1 = require_sqrt(field, field.from_int(-1));
  auto w0 = sqrt_minus1 * MultiVector<F>::generator(field, m, Generator::u0());
  return w0 * w;
}

// ---------------------------------------------------------- serialization

std::string monomial_to_string(Mask mask, int m);

// Terms joined by " + ", each "c*e1 f2 u0" (or bare "c" for the unit monomial).
template <CoefficientField F>
std::string to_string(const MultiVector<F>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += a.field().to_string(c);
    if (mask != 0) out += "*" + monomial_to_string(mask, a.dimension());
  }
  return out;
}

namespace detail {
std::vector<std::string> split_terms(std::string_view text);
// Splits a term into its coefficient text and generator list (in written order).
std::pair<std::string, std::vector<Generator>> split_term(std::string_view term, int m);
}  // namespace detail

// Inverse of to_string; generators inside a term may be written in any order
// and are multiplied left to right.
template <CoefficientField F>
MultiVector<F> parse_multivector(const F& field, int m, std::string_view text) {
  check_dimension(m);
  MultiVector<F> out(field, m);
  for (const auto& term : detail::split_terms(text)) {
    auto [coeff_text, gens] = detail::split_term(term, m);
    auto value = MultiVector<F>::scalar(field, m, field.parse(coeff_text));
    for (auto g : gens) value = value * MultiVector<F>::generator(field, m, g);
    out += value;
  }
  return out;
}

}  // namespace spinforge
