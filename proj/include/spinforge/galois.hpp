#pragma once

#include "spinforge/coeff/number_theory.hpp"
#include "spinforge/rootdata.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinforge {

constexpr std::uint64_t kDefaultSearchBound = 10'000'000;

// Primes p_1 < ... < p_k, each 1 mod 4, pairwise quadratic residues.
struct PrimeTower {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> residues_mod4;
  std::vector<std::vector<int>> legendre;  // legendre[i][j] = (p_i | p_j), 0 on the diagonal
};

// Greedy: p_1 = 5, then the smallest prime p = 1 mod 4 with (p_i | p) = 1 for all
// earlier p_i. Throws BoundExhausted when no prime <= bound qualifies.
PrimeTower prime_tower(int count, std::uint64_t bound = kDefaultSearchBound);
// Rebuilds the certificate from the raw primes and compares.
bool verify_tower(const PrimeTower& tower);

struct PairCertificate {
  std::uint64_t l;
  std::uint64_t p;
  std::uint64_t p_mod_4;
  std::uint64_t p_mod_l;
  std::uint64_t p_mod_l2;
  std::vector<std::uint64_t> tower;
  std::vector<int> tower_symbols;  // (p_i | p)
};

// Smallest prime p in [min_p, bound] with p = 1 mod 4, p = 1 mod l, p != 1 mod l^2
// and (p_i | p) = 1 for every tower prime.
PairCertificate find_pair(std::uint64_t l, const std::vector<std::uint64_t>& tower,
                          std::uint64_t bound = kDefaultSearchBound, std::uint64_t min_p = 0);
bool verify_pair(const PairCertificate& c);

struct OrderCertificate {
  std::uint64_t p;
  std::uint64_t l;
  std::uint64_t q;
  std::uint64_t q_mod_p;
  std::uint64_t q_pow_l_mod_p;  // 1
  std::uint64_t order;          // l
};

// Smallest prime q with q of multiplicative order exactly l mod p. Requires l an odd prime dividing p-1.
OrderCertificate find_order_l_prime(std::uint64_t p, std::uint64_t l, std::uint64_t bound = kDefaultSearchBound);
bool verify_order(const OrderCertificate& c);

// Exponent tables for a choice {n_alpha}, alpha in the simple roots.
struct ExponentData {
  int m;
  std::uint64_t l;
  std::vector<std::int64_t> n_alpha;
  std::vector<SpinWeight> weights;
  std::vector<std::int64_t> e_lambda;  // sum_alpha n_alpha <lambda, alpha^v>
  std::vector<std::vector<int>> negative_roots;
  std::vector<std::int64_t> e_beta;    // sum_alpha n_alpha <beta, alpha^v>
};
ExponentData make_exponent_data(int m, const std::vector<std::int64_t>& n_alpha, std::uint64_t l);

// e_lambda pairwise distinct mod l.
bool check_condition4(const ExponentData& data);

struct Condition5 {
  bool passes;          // 0 < |e_beta| < l for all beta in Phi^-
  std::int64_t max_abs; // max |e_beta|
  bool passes_mod_l;    // e_beta != 0 mod l for all beta (weaker form)
};
Condition5 check_condition5(const ExponentData& data);

// Lexicographically smallest vector in [0, box]^n passing conditions 4 and 5.
std::optional<std::vector<std::int64_t>> find_generic_exponents(int m, std::uint64_t l, std::int64_t box);

// Generator of mu_l in F_p^x: g = x^{(p-1)/l} for the smallest x >= 2 with g != 1.
FpElem mu_l_generator(std::uint64_t p, std::uint64_t l);

// lambda(t) = z * prod_{i : eps_i = -1} t_i^{-1}, in the order of spin_weights(m).
std::vector<FpElem> weight_values(int m, const TorusPoint<PrimeField>& t);

// First t in mu_l^n (lexicographic in exponents of mu_l_generator) with
// z = (prod t_i)^{(l+1)/2} and all lambda(t) distinct; absent otherwise.
std::optional<TorusPoint<PrimeField>> find_regular_torus_point(int m, std::uint64_t l, std::uint64_t p);

struct ReportItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct Prop26Inputs {
  int m;
  PrimeTower tower;
  std::uint64_t l;
  std::uint64_t p;
  std::uint64_t q;
  std::vector<std::int64_t> n_alpha;
};

struct Prop26Report {
  int m;
  std::vector<ReportItem> items;
  std::optional<TorusPoint<PrimeField>> torus_point;

  bool passed() const;
  std::optional<std::string> first_failure() const;
};

// Every finitely checkable premise, each as one pass/fail item.
Prop26Report verify_proposition_2_6_data(const Prop26Inputs& in);

struct Prop26Run {
  Prop26Inputs inputs;
  std::optional<PairCertificate> pair;
  std::optional<OrderCertificate> order;
  Prop26Report report;
  std::vector<std::string> notes;  // stages that could not be completed
};

// Default pipeline: tower of length n (odd m) or n-1 (even m), the smallest prime
// l >= max(h, |Lambda_spin|) admitting generic exponents, then the smallest p and q.
Prop26Run run_residual_pipeline(int m, std::uint64_t bound = kDefaultSearchBound);

}  // namespace spinforge
