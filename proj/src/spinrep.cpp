#include "spinforge/spinrep.hpp"

#include "spinforge/coeff/number_theory.hpp"

#include <algorithm>
#include <bit>

namespace spinforge {

namespace {

std::vector<int> indices(std::uint32_t subset) {
  std::vector<int> out;
  for (int i = 0; subset >> i; ++i)
    if (subset >> i & 1) out.push_back(i + 1);
  return out;
}

}  // namespace

SpinModule::SpinModule(int m) : m_(m), n_(m / 2) {
  check_dimension(m);
  if (n_ < 1) throw PreconditionError("spin module needs m >= 2");
  const bool half = m % 2 == 0;
  for (std::uint32_t s = 0; s < (1u << n_); ++s) {
    if (half && std::popcount(s) % 2 != n_ % 2) continue;
    basis_.push_back(s);
  }
  std::sort(basis_.begin(), basis_.end(), [](std::uint32_t a, std::uint32_t b) { return indices(a) < indices(b); });
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::optional<std::size_t> SpinModule::index_of(std::uint32_t subset) const {
  auto it = index_.find(subset);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string SpinModule::basis_name(std::size_t k) const {
  const auto idx = indices(basis_.at(k));
  if (idx.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += "^";
    out += "e" + std::to_string(idx[i]);
  }
  return out;
}

namespace detail {

SubsetImage monomial_on_subset(int m, Mask monomial, std::uint32_t subset) {
  std::int64_t coeff = 1;
  // rightmost factor acts first
  for (int pos = m - 1; pos >= 0; --pos) {
    if (!(monomial >> pos & 1)) continue;
    const Generator g = generator_at(pos, m);
    if (g.kind == GenKind::U0) {
      if (std::popcount(subset) % 2) coeff = -coeff;
      continue;
    }
    const std::uint32_t bit = 1u << (g.index - 1);
    const int before = std::popcount(subset & (bit - 1));
    const std::int64_t sign = before % 2 ? -1 : 1;
    if (g.kind == GenKind::E) {
      if (subset & bit) return {0, 0};
      subset |= bit;
      coeff *= sign;
    } else {
      if (!(subset & bit)) return {0, 0};
      subset &= ~bit;
      coeff *= 2 * sign;
    }
  }
  return {subset, coeff};
}

}  // namespace detail

std::vector<SpinWeight> torus_weight_diagnostics(int m) {
  const RationalField field;
  const SpinModule module(m);
  const int n = module.rank();
  const Rational half = Rational(1) / 2;
  std::vector<std::vector<int>> signs(module.size(), std::vector<int>(n, 0));
  SpinVector<RationalField> unit(module.size(), field.zero());
  for (int i = 1; i <= n; ++i) {
    const auto h = cartan_element(field, i, m);
    for (std::size_t k = 0; k < module.size(); ++k) {
      unit[k] = 1;
      auto image = clifford_action(module, h, unit);
      unit[k] = 0;
      const Rational diag = image[k];
      image[k] = 0;
      const bool off_diagonal = std::any_of(image.begin(), image.end(), [](const Rational& x) { return x != 0; });
      if (off_diagonal || (diag != half && diag != -half))
        throw MembershipError("Cartan element does not act diagonally by +-1/2");
      signs[k][i - 1] = diag == half ? 1 : -1;
    }
  }
  std::vector<SpinWeight> out;
  for (auto& s : signs) out.push_back({std::move(s)});
  return out;
}

std::string to_string(FormSymmetry s) {
  switch (s) {
    case FormSymmetry::Symmetric:
      return "symmetric";
    case FormSymmetry::Skew:
      return "skew";
    case FormSymmetry::NotSelfDual:
      return "not-self-dual";
  }
  return "?";
}

FormClassification classify_invariant_form(int m) {
  const std::size_t size = SpinModule(m).size();
  if (size <= 32) {
    const auto form = invariant_form(RationalField{}, m);
    return {m, size, form.symmetry, "Q", {}};
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2 * size + 1; primes.size() < 2; ++p)
    if (p % 8 == 1 && is_prime(p)) primes.push_back(p);
  const auto first = invariant_form(PrimeField(primes[0]), m).symmetry;
  const auto second = invariant_form(PrimeField(primes[1]), m).symmetry;
  if (first != second)
    throw Error("invariant form symmetry differs between F_" + std::to_string(primes[0]) + " and F_" +
                std::to_string(primes[1]));
  return {m, size, first, "F_p", primes};
}

CartanCrossCheck cartan_fixed_space(int m) {
  const auto rho = rho_vee(m);
  if (!rho.integral) throw PreconditionError("rho^v is not a cocharacter of T for m = " + std::to_string(m));
  const RationalField field;
  const SpinModule module(m);
  const std::size_t size = module.size();
  std::vector<int> coweight(rho.value.coeffs.begin(), rho.value.coeffs.end());
  std::vector<int> t;
  for (const auto& w : torus_weight_diagnostics(m)) {
    const auto e = pairing(w.doubled(), coweight);
    if (!e.is_integer()) throw Error("rho^v pairs to a half-integer with a spin weight");
    t.push_back(e.value() % 2 == 0 ? 1 : -1);
  }

  const auto span = lie_spanning_set(field, m);
  Matrix<RationalField> lie(field, span.size(), size * size);
  Matrix<RationalField> fixed(field, span.size(), size * size);
  for (std::size_t r = 0; r < span.size(); ++r) {
    const auto x = spin_matrix(module, span[r]);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        lie(r, i * size + j) = x(i, j);
        // (X + t X t) / 2 with t diagonal
        fixed(r, i * size + j) = t[i] * t[j] == 1 ? x(i, j) : Rational(0);
      }
    }
  }
  const auto datum = build_root_datum(m);
  const std::size_t half_roots = datum.roots.size() / 2;
  const std::size_t fixed_rank = fixed.rank();
  return {m, lie.rank(), fixed_rank, half_roots, fixed_rank == half_roots};
}

}  // namespace spinforge
