#include "doctest.h"
#include "oracles.hpp"

#include "spinforge/galois.hpp"

#include <algorithm>
#include <set>

using namespace spinforge;

namespace {

std::uint64_t primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2;; ++g)
    if (oracle::order(g, p) == p - 1) return g;
}

}  // namespace

TEST_CASE("prime tower examples") {
  CHECK(prime_tower(1).primes == std::vector<std::uint64_t>{5});
  CHECK(prime_tower(2).primes == std::vector<std::uint64_t>{5, 29});
  CHECK(prime_tower(3).primes == std::vector<std::uint64_t>{5, 29, 109});
  CHECK_THROWS_AS(prime_tower(3, 100), BoundExhausted);
  CHECK_THROWS_AS(prime_tower(0), PreconditionError);
}

TEST_CASE("prime towers match a brute-force scan and re-verify") {
  for (int count = 1; count <= 6; ++count) {
    const auto tower = prime_tower(count);
    CHECK(verify_tower(tower));
    CHECK(tower.primes == prime_tower(count).primes);
    // greedy scan with the enumerated-squares Legendre symbol
    std::vector<std::uint64_t> expected;
    for (std::uint64_t p = 3; static_cast<int>(expected.size()) < count; ++p) {
      if (!oracle::is_prime(p) || p % 4 != 1) continue;
      bool ok = true;
      for (auto q : expected) ok = ok && oracle::legendre(static_cast<std::int64_t>(q), p) == 1;
      if (ok) expected.push_back(p);
    }
    CHECK(tower.primes == expected);
    for (std::size_t i = 0; i < tower.primes.size(); ++i) {
      CHECK(tower.residues_mod4[i] == 1);
      for (std::size_t j = 0; j < tower.primes.size(); ++j) {
        if (i == j) continue;
        CHECK(tower.legendre[i][j] == 1);
        CHECK(tower.legendre[i][j] == tower.legendre[j][i]);
      }
    }
  }
  auto forged = prime_tower(3);
  forged.primes[2] = 113;
  CHECK_FALSE(verify_tower(forged));
}

TEST_CASE("pair examples") {
  CHECK(find_pair(3, {}).p == 13);
  CHECK(find_pair(5, {}).p == 41);
  const auto c = find_pair(5, {5, 29});
  std::uint64_t expected = 0;
  for (std::uint64_t p = 3;; ++p) {
    if (!oracle::is_prime(p) || p % 4 != 1 || p % 5 != 1 || p % 25 == 1) continue;
    if (oracle::legendre(5, p) != 1 || oracle::legendre(29, p) != 1) continue;
    expected = p;
    break;
  }
  CHECK(c.p == expected);
  CHECK(verify_pair(c));
  CHECK(c.tower_symbols == std::vector<int>{1, 1});
  CHECK_THROWS_AS(find_pair(4, {}), PreconditionError);
  CHECK_THROWS_AS(find_pair(3, {}, 12), BoundExhausted);
  CHECK(find_pair(3, {}, kDefaultSearchBound, 14).p == 61);  // 37 - 1 = 36 is divisible by 9
}

TEST_CASE("pair certificates re-verify from raw arithmetic") {
  const auto tower = prime_tower(3).primes;
  for (std::uint64_t l : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto c = find_pair(l, tower);
    CHECK(verify_pair(c));
    CHECK(oracle::is_prime(c.p));
    CHECK(c.p % 4 == 1);
    CHECK(c.p % l == 1);
    CHECK(c.p % (l * l) != 1);
    for (auto q : tower) CHECK(oracle::legendre(static_cast<std::int64_t>(q), c.p) == 1);
    auto forged = c;
    forged.p_mod_l2 = 1;
    CHECK_FALSE(verify_pair(forged));
  }
}

TEST_CASE("order-l primes") {
  CHECK(find_order_l_prime(41, 5).q == 37);
  CHECK(find_order_l_prime(13, 3).q == 3);
  CHECK_THROWS_AS(find_order_l_prime(41, 3), PreconditionError);
  CHECK_THROWS_AS(find_order_l_prime(41, 1), PreconditionError);
  for (auto [p, l] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{41, 5}, {13, 3}, {661, 11}, {191, 19}, {109, 3}}) {
    const auto c = find_order_l_prime(p, l);
    CHECK(verify_order(c));
    CHECK(oracle::order(c.q, p) == l);
    std::uint64_t first = 2;
    while (!(oracle::is_prime(first) && first % p != 0 && oracle::order(first, p) == l)) ++first;
    CHECK(c.q == first);
  }
}

TEST_CASE("conditions 4 and 5 examples") {
  const auto d = make_exponent_data(7, {1, 3, 9}, 19);
  CHECK(check_condition4(d));
  std::multiset<std::int64_t> got(d.e_lambda.begin(), d.e_lambda.end());
  CHECK(got == std::multiset<std::int64_t>{-9, -8, -7, -6, 6, 7, 8, 9});
  const auto c5 = check_condition5(d);
  CHECK(c5.passes);
  CHECK(c5.max_abs == 17);
  CHECK_FALSE(check_condition5(make_exponent_data(7, {1, 3, 9}, 17)).passes);
  CHECK_FALSE(check_condition4(make_exponent_data(7, {0, 0, 0}, 19)));
  CHECK_FALSE(check_condition5(make_exponent_data(7, {0, 0, 0}, 19)).passes);
  CHECK_FALSE(check_condition4(make_exponent_data(7, {1, 2, 4}, 19)));
  CHECK_FALSE(check_condition4(make_exponent_data(7, {1, 2, 4}, 101)));
}

TEST_CASE("exponent tables agree with hand-written coroots") {
  for (int m = 5; m <= 11; ++m) {
    const int n = m / 2;
    for (std::int64_t seed = 0; seed < 30; ++seed) {
      std::vector<std::int64_t> na;
      for (int i = 0; i < n; ++i) na.push_back((seed * 7 + i * i * 3 + i) % 6);
      const auto d = make_exponent_data(m, na, 101);
      const auto t = oracle::exponent_tables(m, na);
      std::multiset<std::int64_t> a(d.e_lambda.begin(), d.e_lambda.end()), b(t.e_lambda.begin(), t.e_lambda.end());
      CHECK(a == b);
      std::multiset<std::int64_t> c(d.e_beta.begin(), d.e_beta.end()), e(t.e_beta.begin(), t.e_beta.end());
      CHECK(c == e);
    }
  }
}

TEST_CASE("conditions agree with characters evaluated on a generator") {
  // chi_lambda(x) = mu_l_projection(x)^{e_lambda}; distinct characters are distinct on a generator
  struct Case {
    std::uint64_t p, l;
  };
  for (auto [p, l] : {Case{191, 19}, Case{67, 11}, Case{131, 13}, Case{41, 5}}) {
    const auto g = FpElem(primitive_root(p), p);
    const auto zeta = mu_l_projection(g, l);
    REQUIRE(oracle::order(zeta.residue, p) == l);
    for (const auto& na : std::vector<std::vector<std::int64_t>>{{1, 3, 9}, {1, 3, 4}, {1, 2, 4}, {0, 0, 0}, {2, 5, 1}, {1, 1, 1}}) {
      const auto d = make_exponent_data(7, na, l);
      const auto character = [&](std::int64_t e) {
        const auto L = static_cast<std::int64_t>(l);
        return oracle::slow_pow(zeta.residue, static_cast<std::uint64_t>(((e % L) + L) % L), p);
      };
      std::set<std::uint64_t> values;
      for (auto e : d.e_lambda) values.insert(character(e));
      CHECK(check_condition4(d) == (values.size() == d.e_lambda.size()));
      bool nontrivial = true;
      for (auto e : d.e_beta) nontrivial = nontrivial && character(e) != 1;
      CHECK(check_condition5(d).passes_mod_l == nontrivial);
    }
  }
}

TEST_CASE("generic exponents") {
  const auto v = find_generic_exponents(7, 19, 10);
  REQUIRE(v);
  CHECK(*v == std::vector<std::int64_t>{1, 3, 4});
  CHECK(oracle::exponents_generic(7, 19, {1, 3, 9}));
  CHECK_FALSE(find_generic_exponents(7, 3, 10));
  CHECK_FALSE(find_generic_exponents(7, 19, 0));

  // exhaustive lexicographic scan
  struct Case {
    int m;
    std::uint64_t l;
    std::int64_t box;
  };
  for (auto [m, l, box] : {Case{7, 19, 6}, Case{7, 11, 5}, Case{8, 11, 5}, Case{9, 17, 4}, Case{9, 31, 5}, Case{10, 19, 4}}) {
    const int n = m / 2;
    std::optional<std::vector<std::int64_t>> expected;
    std::vector<std::int64_t> x(n, 0);
    for (;;) {
      if (oracle::exponents_generic(m, l, x)) {
        expected = x;
        break;
      }
      int k = n - 1;
      while (k >= 0 && x[k] == box) x[k--] = 0;
      if (k < 0) break;
      ++x[k];
    }
    CHECK_MESSAGE(find_generic_exponents(m, l, box) == expected, "m = " << m << ", l = " << l);
  }
}

TEST_CASE("regular torus points") {
  const auto t = find_regular_torus_point(7, 19, 191);
  REQUIRE(t);
  CHECK(t->satisfies_relation(PrimeField(191)));
  const auto values = weight_values(7, *t);
  CHECK(std::set<FpElem, bool (*)(const FpElem&, const FpElem&)>(
            values.begin(), values.end(), [](const FpElem& a, const FpElem& b) { return a.residue < b.residue; })
            .size() == 8);
  for (const auto& ti : t->t) CHECK(oracle::slow_pow(ti.residue, 19, 191) == 1);
  // recompute lambda(t) = z prod_{eps_i = -1} t_i^{-1} directly
  const auto weights = spin_weights(7);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    std::uint64_t v = t->z.residue;
    for (int i = 0; i < 3; ++i)
      if (weights[k].signs[i] == -1) v = oracle::mulmod(v, oracle::slow_pow(t->t[i].residue, 18, 191), 191);
    CHECK(values[k].residue == v);
  }

  CHECK_FALSE(find_regular_torus_point(9, 3, 7));
  CHECK_THROWS_AS(find_regular_torus_point(7, 19, 193), PreconditionError);

  const PrimeField f(191);
  const TorusPoint<PrimeField> ones{f.one(), {f.one(), f.one(), f.one()}};
  for (const auto& v : weight_values(7, ones)) CHECK(v == f.one());
}

TEST_CASE("full pipeline for m = 7 and m = 11") {
  const auto run = run_residual_pipeline(7);
  CHECK(run.report.passed());
  CHECK(run.notes.empty());
  REQUIRE(run.pair);
  REQUIRE(run.order);
  CHECK(verify_tower(run.inputs.tower));
  CHECK(verify_pair(*run.pair));
  CHECK(verify_order(*run.order));
  const auto l = run.inputs.l, p = run.inputs.p, q = run.inputs.q;
  CHECK(oracle::is_prime(l));
  CHECK(l >= 8);
  CHECK((p - 1) % l == 0);
  CHECK((p - 1) % (l * l) != 0);
  CHECK(p % 4 == 1);
  CHECK(oracle::order(q, p) == l);
  for (auto pi : run.inputs.tower.primes) CHECK(oracle::legendre(static_cast<std::int64_t>(pi), p) == 1);
  CHECK(oracle::exponents_generic(7, l, run.inputs.n_alpha));
  REQUIRE(run.report.torus_point);

  const auto r11 = run_residual_pipeline(11);
  CHECK_FALSE(r11.report.passed());
  CHECK(r11.report.first_failure() == "rho_vee_integral");
}

TEST_CASE("zero exponents fail conditions 4 and 5 only") {
  auto in = run_residual_pipeline(7).inputs;
  in.n_alpha = {0, 0, 0};
  const auto report = verify_proposition_2_6_data(in);
  CHECK_FALSE(report.passed());
  for (const auto& item : report.items) {
    const bool should_fail = item.name == "condition4" || item.name == "condition5";
    CHECK_MESSAGE(item.passed != should_fail, item.name);
  }
}
