#pragma once

#include "spinforge/clifford.hpp"
#include "spinforge/linalg.hpp"
#include "spinforge/rootdata.hpp"
#include "spinforge/spingroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace spinforge {

// Spin module inside the exterior algebra of W = span(e_1, ..., e_n). A basis
// vector is a subset of {1..n}, stored as a bitmask (bit i-1 for index i).
// Basis order: lexicographic on increasing index sequences, so for n = 3
//   {}, {1}, {1,2}, {1,2,3}, {1,3}, {2}, {2,3}, {3}.
// Odd m uses all of Lambda W; even m uses Lambda^even W for even n and
// Lambda^odd W for odd n.
class SpinModule {
 public:
  explicit SpinModule(int m);

  int dimension_m() const { return m_; }
  int rank() const { return n_; }
  bool is_half_spin() const { return m_ % 2 == 0; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<std::uint32_t>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(std::uint32_t subset) const;
  std::string basis_name(std::size_t k) const;

 private:
  int m_;
  int n_;
  std::vector<std::uint32_t> basis_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

namespace detail {
struct SubsetImage {
  std::uint32_t subset;
  std::int64_t coeff;  // 0 means the image vanishes
};
// A canonical Clifford monomial acting on one wedge basis vector:
//   e_i : wedge, sign (-1)^{#{j in S : j < i}};  f_i : 2 * contraction, same sign;
//   u_0 : (-1)^{|S|}.
SubsetImage monomial_on_subset(int m, Mask monomial, std::uint32_t subset);
}  // namespace detail

template <CoefficientField F>
using SpinVector = std::vector<typename F::value_type>;

template <CoefficientField F>
SpinVector<F> clifford_action(const SpinModule& module, const MultiVector<F>& a, const SpinVector<F>& v) {
  if (a.dimension() != module.dimension_m()) throw DimensionMismatch("multivector and spin module have different m");
  if (v.size() != module.size()) throw DimensionMismatch("spin vector has wrong length");
  if (module.is_half_spin()) {
    const auto parity = grade_parity(a);
    if (parity == GradeParity::Odd || parity == GradeParity::Mixed)
      throw ParityError("odd-graded element does not preserve the half-spin module");
  }
  const F& field = a.field();
  SpinVector<F> out(module.size(), field.zero());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == field.zero()) continue;
    const auto subset = module.basis()[j];
    for (const auto& [mask, c] : a.terms()) {
      const auto image = detail::monomial_on_subset(module.dimension_m(), mask, subset);
      if (image.coeff == 0) continue;
      const auto k = *module.index_of(image.subset);
      out[k] = out[k] + field.from_int(image.coeff) * c * v[j];
    }
  }
  return out;
}

// Matrix of v -> a v on the module basis; N x N with columns the images of the basis.
template <CoefficientField F>
Matrix<F> spin_matrix(const SpinModule& module, const MultiVector<F>& a) {
  const F& field = a.field();
  const std::size_t size = module.size();
  Matrix<F> out(field, size, size);
  SpinVector<F> unit(size, field.zero());
  for (std::size_t j = 0; j < size; ++j) {
    unit[j] = field.one();
    const auto column = clifford_action(module, a, unit);
    unit[j] = field.zero();
    for (std::size_t i = 0; i < size; ++i) out(i, j) = column[i];
  }
  return out;
}

template <CoefficientField F>
Matrix<F> spin_matrix(const SpinElement<F>& g) {
  return spin_matrix(SpinModule(g.dimension()), g.element());
}

// H_i = 1/4 (e_i f_i - f_i e_i), the Cartan element dual to chi_i.
template <CoefficientField F>
MultiVector<F> cartan_element(const F& field, int i, int m) {
  const auto e = MultiVector<F>::generator(field, m, Generator::e(i));
  const auto f = MultiVector<F>::generator(field, m, Generator::f(i));
  return require_inv(field, field.from_int(4)) * (e * f - f * e);
}

// Weight of each basis vector, read off the diagonal action of H_1..H_n.
// Throws MembershipError if some H_i fails to act diagonally by +-1/2.
std::vector<SpinWeight> torus_weight_diagnostics(int m);

// Spanning set {1/4 (b_k b_l - b_l b_k) : k < l} of the Lie algebra so_m inside
// C(Q)^even, with the Cartan pairs (k + l = m - 1) listed first.
template <CoefficientField F>
std::vector<MultiVector<F>> lie_spanning_set(const F& field, int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l)
      if (k + l == m - 1) pairs.emplace_back(k, l);
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l)
      if (k + l != m - 1) pairs.emplace_back(k, l);
  const auto quarter = require_inv(field, field.from_int(4));
  std::vector<MultiVector<F>> out;
  for (auto [k, l] : pairs) {
    const auto bk = MultiVector<F>::generator(field, m, generator_at(k, m));
    const auto bl = MultiVector<F>::generator(field, m, generator_at(l, m));
    out.push_back(quarter * (bk * bl - bl * bk));
  }
  return out;
}

enum class FormSymmetry { Symmetric, Skew, NotSelfDual };
std::string to_string(FormSymmetry s);

template <CoefficientField F>
struct InvariantForm {
  FormSymmetry symmetry;
  std::size_t solution_dimension;
  std::optional<Matrix<F>> form;  // present unless not self-dual
};

// Solves X^t B + B X = 0 for all X in the Lie spanning set. The solution space
// must be 0- or 1-dimensional; a nonzero solution must be nondegenerate and
// satisfy B^t = +-B.
template <CoefficientField F>
InvariantForm<F> invariant_form(const F& field, int m) {
  const SpinModule module(m);
  const std::size_t size = module.size();
  const auto var = [size](std::size_t i, std::size_t j) { return i * size + j; };
  SparseEchelon<F> system(field, size * size);
  const std::size_t full_rank = size * size - 1;

  for (const auto& x : lie_spanning_set(field, m)) {
    // sparse columns of the action matrix
    std::vector<std::vector<std::pair<std::size_t, typename F::value_type>>> cols(size);
    const auto mat = spin_matrix(module, x);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t j = 0; j < size; ++j)
        if (!(mat(a, j) == field.zero())) cols[j].emplace_back(a, mat(a, j));
    // (X^t B + B X)(i, j) = sum_a X(a, i) B(a, j) + sum_a B(i, a) X(a, j)
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (cols[i].empty() && cols[j].empty()) continue;
        typename SparseEchelon<F>::Row row;
        for (const auto& [a, v] : cols[i]) {
          auto [slot, fresh] = row.try_emplace(var(a, j), field.zero());
          slot->second = slot->second + v;
        }
        for (const auto& [a, v] : cols[j]) {
          auto [slot, fresh] = row.try_emplace(var(i, a), field.zero());
          slot->second = slot->second + v;
        }
        system.add_row(std::move(row));
        if (system.rank() > full_rank) break;
      }
      if (system.rank() > full_rank) break;
    }
    if (system.rank() > full_rank) break;
  }

  const auto kernel = system.nullspace();
  if (kernel.empty()) return {FormSymmetry::NotSelfDual, 0, std::nullopt};
  if (kernel.size() > 1)
    throw Error("invariant form space has dimension " + std::to_string(kernel.size()) + "; module is not irreducible");

  Matrix<F> b(field, size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) b(i, j) = kernel[0][var(i, j)];
  if (b.rank() != size) throw Error("invariant form is degenerate");
  const auto bt = b.transpose();
  FormSymmetry sym;
  if (bt == b) sym = FormSymmetry::Symmetric;
  else if (bt == -b) sym = FormSymmetry::Skew;
  else throw Error("invariant form is neither symmetric nor skew");
  return {sym, 1, std::move(b)};
}

struct FormClassification {
  int m;
  std::size_t module_dimension;
  FormSymmetry symmetry;
  std::string ring;                   // "Q" or "F_p"
  std::vector<std::uint64_t> primes;  // the primes used when ring is F_p
};

// Exact over Q when the module has dimension <= 32; otherwise over the two
// smallest primes p > 2N with p = 1 mod 8, which must agree.
FormClassification classify_invariant_form(int m);

struct CartanCrossCheck {
  int m;
  std::size_t lie_dimension;   // rank of the Lie spanning set acting on S
  std::size_t fixed_dimension; // dim of the Ad(t)-fixed part, t = rho^v(-1) on S
  std::size_t half_root_count;
  bool agrees;
};
// Realizes rho^v(-1) on S as diag((-1)^{<lambda, rho^v>}) and computes the rank of
// {(X + t X t) / 2} over the Lie spanning set. Requires integral rho^v.
CartanCrossCheck cartan_fixed_space(int m);

}  // namespace spinforge
