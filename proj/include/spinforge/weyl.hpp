#pragma once

#include "spinforge/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spinforge {

enum class RootType { B, D };

inline RootType root_type_for(int m) { return m % 2 == 1 ? RootType::B : RootType::D; }
inline int dimension_for(int n, RootType t) { return t == RootType::B ? 2 * n + 1 : 2 * n; }
std::string to_string(RootType t);
RootType parse_root_type(const std::string& s);

// Element of D: a sign vector, restricted to an even number of -1 entries when m is even.
class SignChange {
 public:
  SignChange() = default;
  // Throws PreconditionError on entries other than +-1 or a parity violation.
  SignChange(std::vector<int> signs, RootType type);

  static SignChange identity(int n, RootType type) { return {std::vector<int>(n, 1), type}; }
  static SignChange all_minus(int n, RootType type) { return {std::vector<int>(n, -1), type}; }
  // Bit i set means entry i+1 is -1.
  static SignChange from_mask(std::uint32_t mask, int n, RootType type);

  int rank() const { return static_cast<int>(signs_.size()); }
  RootType type() const { return type_; }
  int operator[](int i) const { return signs_[i]; }  // 0-based
  const std::vector<int>& signs() const { return signs_; }
  std::uint32_t mask() const;
  int minus_count() const;

  friend SignChange operator*(const SignChange& a, const SignChange& b);
  bool operator==(const SignChange& o) const { return signs_ == o.signs_ && type_ == o.type_; }

 private:
  std::vector<int> signs_;
  RootType type_ = RootType::B;
};

// All elements of D in increasing mask order.
std::vector<SignChange> sign_change_group(int n, RootType type);

// Element (eps, sigma) of W = D x| S_n, acting as eps after sigma.
// perm is 0-based: perm[j] = sigma(j).
struct SignedPermutation {
  SignChange signs;
  std::vector<int> perm;

  static SignedPermutation identity(int n, RootType type);
  int rank() const { return static_cast<int>(perm.size()); }
  bool operator==(const SignedPermutation&) const = default;
};

// (eps, s)(eps', s') = (eps * s(eps'), s s') with s(eps')_{s(j)} = eps'_j.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
void validate(const SignedPermutation& w);
// Every element of W for the given rank and type.
std::vector<SignedPermutation> weyl_group_elements(int n, RootType type);

}  // namespace spinforge
