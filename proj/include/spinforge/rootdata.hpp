#pragma once

#include "spinforge/coeff/field.hpp"
#include "spinforge/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spinforge {

// Weights live in chi-coordinates (half-integers, stored doubled); coweights and
// cocharacters live in the dual lambda-basis (integers), with <chi_i, lambda_j> = delta_ij.

struct Root {
  std::vector<int> coords;  // chi-coordinates
  int height;               // negative for negative roots
};

struct RootDatum {
  RootType type;
  int rank;
  int dimension;
  std::vector<Root> roots;
  std::vector<std::vector<int>> simple_roots;
  std::vector<std::vector<int>> simple_coroots;  // lambda-coordinates

  std::vector<Root> positive_roots() const;
  std::vector<Root> negative_roots() const;
  // 2n for B_n, 2n - 2 for D_n
  int coxeter_number() const;
};

// Requires m >= 5.
RootDatum build_root_datum(int m);

// alpha^v = 2 alpha / (alpha, alpha), in lambda-coordinates.
std::vector<int> coroot(const std::vector<int>& root);

// Coefficients of a root in the simple roots.
std::vector<int> simple_root_coefficients(const RootDatum& datum, const std::vector<int>& root);

// Value <weight, coweight> with weight given in doubled chi-coordinates.
struct HalfInteger {
  std::int64_t twice = 0;
  bool is_integer() const { return twice % 2 == 0; }
  std::int64_t value() const { return twice / 2; }  // exact only when is_integer()
  bool operator==(const HalfInteger&) const = default;
};
std::string to_string(HalfInteger h);

HalfInteger pairing(const std::vector<int>& doubled_weight, const std::vector<int>& coweight);

// 1/2 (sum_i signs_i chi_i)
struct SpinWeight {
  std::vector<int> signs;

  std::vector<int> doubled() const { return signs; }
  bool operator==(const SpinWeight&) const = default;
  auto operator<=>(const SpinWeight&) const = default;
};
std::string to_string(const SpinWeight& w);

// All sign vectors (B) or those with an even number of minus signs (D).
std::vector<SpinWeight> spin_weights(int m);

// Coordinatewise sign flip.
SpinWeight d_orbit(const SignChange& eps, const SpinWeight& weight);

struct TransitivityReport {
  int group_order;
  int weight_count;
  int orbit_size;
  int stabilizer_size;
  bool simply_transitive;
};
// Orbit of 1/2(+, ..., +) under D has size |D| = |Lambda_spin| with trivial stabilizer.
TransitivityReport check_simple_transitivity(int m);

// sum_i coeffs_i lambda_i; lies in X_*(T) iff sum coeffs_i is even.
struct Cocharacter {
  std::vector<std::int64_t> coeffs;

  std::int64_t coefficient_sum() const;
  bool in_lattice() const { return coefficient_sum() % 2 == 0; }
  bool operator==(const Cocharacter&) const = default;
};

struct RhoVee {
  Cocharacter value;
  bool integral;
};
// Half-sum of the positive coroots, by enumeration.
RhoVee rho_vee(int m);

struct CartanReport {
  int m;
  int rank;
  int root_count;
  int even_height_roots;
  int fixed_dimension;  // rank + #even-height roots
  int half_root_count;
  bool split;
};
// dim so_m^{Ad rho^v(-1)} = n + #{alpha : ht(alpha) even} compared with |Phi| / 2.
// Throws PreconditionError when rho^v is not integral.
CartanReport cartan_involution_check(int m);

enum class FormType { Symmetric, Skew, None };
std::string to_string(FormType t);

struct ParityReport {
  int m;
  bool qualifies;
  FormType form_type;
  bool w0_minus_one;
  int w0_lift_order;
};
ParityReport parity_classify(int m);

template <CoefficientField F>
struct TorusPoint {
  typename F::value_type z;
  std::vector<typename F::value_type> t;

  bool satisfies_relation(const F& field) const {
    auto prod = field.one();
    for (const auto& ti : t) prod = prod * ti;
    return z * z == prod;
  }
  bool is_identity(const F& field) const {
    if (!(z == field.one())) return false;
    for (const auto& ti : t)
      if (!(ti == field.one())) return false;
    return true;
  }
  bool operator==(const TorusPoint&) const = default;
};

template <CoefficientField F>
TorusPoint<F> multiply(const TorusPoint<F>& a, const TorusPoint<F>& b) {
  TorusPoint<F> out{a.z * b.z, {}};
  for (std::size_t i = 0; i < a.t.size(); ++i) out.t.push_back(a.t[i] * b.t[i]);
  return out;
}

// t_i = s^{c_i}, z = s^{(sum c_i) / 2}; requires an even coefficient sum.
template <CoefficientField F>
TorusPoint<F> cochar_eval(const F& field, const Cocharacter& c, const typename F::value_type& s) {
  if (!c.in_lattice()) throw PreconditionError("cocharacter has odd coefficient sum");
  TorusPoint<F> out{power(field, s, c.coefficient_sum() / 2), {}};
  for (auto ci : c.coeffs) out.t.push_back(power(field, s, ci));
  return out;
}

struct LParamReport {
  bool descends;     // sum m_i = n(n+1)/2 mod 2
  bool l_algebraic;  // descends, n = 0,3 mod 4, sum m_i even
  bool regular;      // entries distinct and positive (warning only)
};
LParamReport lparam_descent(int n, const std::vector<std::int64_t>& m_vec);

}  // namespace spinforge
