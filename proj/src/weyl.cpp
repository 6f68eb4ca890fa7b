#include "spinforge/weyl.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spinforge {

std::string to_string(RootType t) { return t == RootType::B ? "B" : "D"; }

RootType parse_root_type(const std::string& s) {
  if (s == "B" || s == "b") return RootType::B;
  if (s == "D" || s == "d") return RootType::D;
  throw PreconditionError("root type must be B or D, got '" + s + "'");
}

SignChange::SignChange(std::vector<int> signs, RootType type) : signs_(std::move(signs)), type_(type) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw PreconditionError("sign change entries must be +1 or -1");
  }
  if (type_ == RootType::D && minus_count() % 2 != 0)
    throw PreconditionError("sign change for even m needs an even number of -1 entries");
}

SignChange SignChange::from_mask(std::uint32_t mask, int n, RootType type) {
  std::vector<int> signs(n, 1);
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) signs[i] = -1;
  return {std::move(signs), type};
}

std::uint32_t SignChange::mask() const {
  std::uint32_t m = 0;
  for (int i = 0; i < rank(); ++i)
    if (signs_[i] == -1) m |= 1u << i;
  return m;
}

int SignChange::minus_count() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1)); }

SignChange operator*(const SignChange& a, const SignChange& b) {
  if (a.rank() != b.rank() || a.type() != b.type()) throw DimensionMismatch("sign changes of different rank");
  std::vector<int> out(a.rank());
  for (int i = 0; i < a.rank(); ++i) out[i] = a[i] * b[i];
  return {std::move(out), a.type()};
}

std::vector<SignChange> sign_change_group(int n, RootType type) {
  if (n < 1 || n > 20) throw PreconditionError("rank out of range for sign-change enumeration");
  std::vector<SignChange> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (type == RootType::D && std::popcount(mask) % 2 != 0) continue;
    out.push_back(SignChange::from_mask(mask, n, type));
  }
  return out;
}

SignedPermutation SignedPermutation::identity(int n, RootType type) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return {SignChange::identity(n, type), std::move(perm)};
}

void validate(const SignedPermutation& w) {
  const int n = w.rank();
  if (w.signs.rank() != n) throw PreconditionError("signed permutation: sign and permutation ranks differ");
  std::vector<int> sorted = w.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i) throw PreconditionError("signed permutation: perm is not a permutation");
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  validate(a);
  validate(b);
  const int n = a.rank();
  if (b.rank() != n) throw DimensionMismatch("signed permutations of different rank");
  std::vector<int> moved(n);
  for (int j = 0; j < n; ++j) moved[a.perm[j]] = b.signs[j];
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = a.perm[b.perm[j]];
  return {a.signs * SignChange(std::move(moved), a.signs.type()), std::move(perm)};
}

std::vector<SignedPermutation> weyl_group_elements(int n, RootType type) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto signs = sign_change_group(n, type);
  do {
    for (const auto& s : signs) out.push_back({s, perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace spinforge
