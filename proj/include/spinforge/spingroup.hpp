#pragma once

#include "spinforge/clifford.hpp"
#include "spinforge/linalg.hpp"
#include "spinforge/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinforge {

// m x m matrix with g J g^t = J and det g = 1, both checked on construction.
template <CoefficientField F>
class SOMatrix {
 public:
  static SOMatrix make(Matrix<F> g) {
    if (g.rows() != g.cols()) throw MembershipError("SO matrix must be square");
    const auto j = Matrix<F>::anti_identity(g.field(), g.rows());
    if (!(g * j * g.transpose() == j)) throw MembershipError("matrix does not preserve the split form");
    if (!(g.determinant() == g.field().one())) throw MembershipError("matrix has determinant != 1");
    return SOMatrix(std::move(g));
  }

  const Matrix<F>& matrix() const { return g_; }
  std::size_t dimension() const { return g_.rows(); }

  friend SOMatrix operator*(const SOMatrix& a, const SOMatrix& b) { return SOMatrix(a.g_ * b.g_); }
  friend bool operator==(const SOMatrix& a, const SOMatrix& b) { return a.g_ == b.g_; }

 private:
  explicit SOMatrix(Matrix<F> g) : g_(std::move(g)) {}
  Matrix<F> g_;
};

enum class Membership { GSpin, Spin, Neither };
std::string to_string(Membership m);

// Matrix of v -> g v g^* in the ordered basis, or absent when some image leaves V.
template <CoefficientField F>
std::optional<Matrix<F>> conjugation_matrix(const MultiVector<F>& g) {
  const int m = g.dimension();
  const auto gs = star(g);
  Matrix<F> out(g.field(), m, m);
  for (int j = 0; j < m; ++j) {
    auto image = g * MultiVector<F>::monomial(g.field(), m, Mask{1} << j, g.field().one()) * gs;
    auto coords = image.vector_coordinates();
    if (!coords) return std::nullopt;
    for (int i = 0; i < m; ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

// Even parity, unit scalar norm and g V g^* in V; Spin when the norm is 1.
template <CoefficientField F>
Membership is_gspin(const MultiVector<F>& g) {
  if (grade_parity(g) != GradeParity::Even) return Membership::Neither;
  const auto norm = clifford_norm(g);
  if (!norm.is_scalar() || norm.is_zero()) return Membership::Neither;
  if (!conjugation_matrix(g)) return Membership::Neither;
  return norm.scalar_part() == g.field().one() ? Membership::Spin : Membership::GSpin;
}

// Element of Spin_m; membership is verified by the constructor, never assumed.
template <CoefficientField F>
class SpinElement {
 public:
  static SpinElement make(MultiVector<F> g) {
    if (is_gspin(g) != Membership::Spin) throw MembershipError("element is not in Spin_m: " + to_string(g));
    auto proj = SOMatrix<F>::make(*conjugation_matrix(g));
    return SpinElement(std::move(g), std::move(proj));
  }

  const MultiVector<F>& element() const { return g_; }
  const SOMatrix<F>& projection() const { return proj_; }
  int dimension() const { return g_.dimension(); }

  friend SpinElement operator*(const SpinElement& a, const SpinElement& b) {
    return SpinElement(a.g_ * b.g_, a.proj_ * b.proj_);
  }
  friend SpinElement operator-(const SpinElement& a) { return SpinElement(-a.g_, a.proj_); }
  friend bool operator==(const SpinElement& a, const SpinElement& b) { return a.g_ == b.g_; }

 private:
  SpinElement(MultiVector<F> g, SOMatrix<F> proj) : g_(std::move(g)), proj_(std::move(proj)) {}
  MultiVector<F> g_;
  SOMatrix<F> proj_;
};

// The covering map pi: Spin_m -> SO_m.
template <CoefficientField F>
SOMatrix<F> project(const SpinElement<F>& g) {
  return g.projection();
}

namespace detail {
inline int rank_for(int m, const SignChange& eps) {
  if (root_type_for(m) != eps.type() || eps.rank() != m / 2)
    throw DimensionMismatch("sign change does not match dimension m");
  return m / 2;
}
}  // namespace detail

// d_eps: swap columns i and m+1-i of I_m for each eps_i = -1; for odd m the
// middle entry becomes (-1)^{#minus}.
template <CoefficientField F>
SOMatrix<F> d_epsilon_matrix(const F& field, const SignChange& eps, int m) {
  const int n = detail::rank_for(m, eps);
  auto g = Matrix<F>::identity(field, m);
  for (int i = 0; i < n; ++i) {
    if (eps[i] != -1) continue;
    g(i, i) = field.zero();
    g(m - 1 - i, m - 1 - i) = field.zero();
    g(i, m - 1 - i) = field.one();
    g(m - 1 - i, i) = field.one();
  }
  if (m % 2 == 1 && eps.minus_count() % 2 == 1) g(n, n) = field.from_int(-1);
  return SOMatrix<F>::make(std::move(g));
}

// s(sigma) = diag(M_sigma, [1,] J M_sigma J) with M_sigma(sigma(j), j) = 1.
template <CoefficientField F>
SOMatrix<F> permutation_section(const F& field, const std::vector<int>& perm, int m) {
  const int n = m / 2;
  if (static_cast<int>(perm.size()) != n) throw DimensionMismatch("permutation rank does not match m");
  Matrix<F> g(field, m, m);
  for (int j = 0; j < n; ++j) {
    const int i = perm[j];
    g(i, j) = field.one();
    // J M J in the lower block: local (n-1-i, n-1-j)
    g(m - 1 - i, m - 1 - j) = field.one();
  }
  if (m % 2 == 1) g(n, n) = field.one();
  return SOMatrix<F>::make(std::move(g));
}

// Section W -> N(T_SO): s(eps, sigma) = d_eps * s(sigma).
template <CoefficientField F>
SOMatrix<F> weyl_section(const F& field, const SignedPermutation& w, int m) {
  validate(w);
  detail::rank_for(m, w.signs);
  return d_epsilon_matrix(field, w.signs, m) * permutation_section(field, w.perm, m);
}

// Product of weyl_generator(i) over {i : eps_i = -1} in increasing i.
template <CoefficientField F>
SpinElement<F> lift_sign_change(const F& field, const SignChange& eps, int m) {
  const int n = detail::rank_for(m, eps);
  auto g = MultiVector<F>::one(field, m);
  for (int i = 0; i < n; ++i) {
    if (eps[i] == -1) g = g * weyl_generator(field, i + 1, m);
  }
  return SpinElement<F>::make(std::move(g));
}

// Lift of the longest Weyl element w0 = (-1, ..., -1); needs w0 in D.
template <CoefficientField F>
SpinElement<F> lift_longest_element(const F& field, int m) {
  const int n = m / 2;
  if (m % 2 == 0 && n % 2 == 1) throw PreconditionError("w0 is not in D when m = 2n with n odd");
  return lift_sign_change(field, SignChange::all_minus(n, root_type_for(m)), m);
}

// Least k <= cap with g^k = 1.
template <CoefficientField F>
std::optional<int> element_order(const SpinElement<F>& g, int cap) {
  if (cap < 1) throw PreconditionError("order cap must be >= 1");
  const auto one = MultiVector<F>::one(g.element().field(), g.dimension());
  auto acc = g.element();
  for (int k = 1; k <= cap; ++k) {
    if (acc == one) return k;
    acc = acc * g.element();
  }
  return std::nullopt;
}

// Result of the exhaustive section search for 1 -> {+-1} -> D~ -> D -> 1.
struct ExtensionResult {
  RootType type;
  int rank;
  int group_order;                      // |D|
  bool splits;
  std::vector<std::uint32_t> elements;  // masks of D, in search order
  std::vector<int> section_signs;       // witness: section(d) = sign * canonical lift(d)
  std::vector<std::vector<int>> cocycle;  // L(d) L(d') = c(d, d') L(dd')
};

// Exhaustive search over all 2^|D| sign choices; requires |D| <= 16.
ExtensionResult extension_splits(int n, RootType type);

}  // namespace spinforge
