#include "doctest.h"

#include "spinforge/spingroup.hpp"

#include <random>

using namespace spinforge;

namespace {

const Cyclo8Field K;
const RationalField Q;

template <CoefficientField F>
Matrix<F> swapped_identity(const F& field, int m, std::initializer_list<int> columns) {
  auto g = Matrix<F>::identity(field, m);
  for (int c : columns) {  // 1-based, swapped with m + 1 - c
    const int a = c - 1, b = m - c;
    g(a, a) = field.zero();
    g(b, b) = field.zero();
    g(a, b) = field.one();
    g(b, a) = field.one();
  }
  return g;
}

// All elements +-L(eps) of the preimage of D.
std::vector<SpinElement<Cyclo8Field>> lifted_d(int m) {
  std::vector<SpinElement<Cyclo8Field>> out;
  for (const auto& eps : sign_change_group(m / 2, root_type_for(m))) {
    auto g = lift_sign_change(K, eps, m);
    out.push_back(g);
    out.push_back(-g);
  }
  return out;
}

}  // namespace

TEST_CASE("membership classification") {
  CHECK(is_gspin(MultiVector<Cyclo8Field>::one(K, 8)) == Membership::Spin);
  const auto w12 = weyl_generator(K, 1, 8) * weyl_generator(K, 2, 8);
  CHECK(is_gspin(w12) == Membership::Spin);
  CHECK(is_gspin(MultiVector<Cyclo8Field>::generator(K, 8, Generator::e(1))) == Membership::Neither);
  CHECK(is_gspin(K.from_int(3) * w12) == Membership::GSpin);
  // even, but the norm is not a unit scalar
  const auto e1f1 = MultiVector<Cyclo8Field>::generator(K, 8, Generator::e(1)) *
                    MultiVector<Cyclo8Field>::generator(K, 8, Generator::f(1));
  CHECK(is_gspin(e1f1) == Membership::Neither);
  CHECK_THROWS_AS(SpinElement<Cyclo8Field>::make(e1f1), MembershipError);
}

TEST_CASE("projection examples") {
  const auto one = SpinElement<Cyclo8Field>::make(MultiVector<Cyclo8Field>::one(K, 8));
  CHECK(project(one).matrix() == Matrix<Cyclo8Field>::identity(K, 8));

  const auto w12 = SpinElement<Cyclo8Field>::make(weyl_generator(K, 1, 8) * weyl_generator(K, 2, 8));
  CHECK(project(w12).matrix() == swapped_identity(K, 8, {1, 2}));

  const auto o1 = SpinElement<Cyclo8Field>::make(weyl_generator(K, 1, 7));
  auto expected = swapped_identity(K, 7, {1});
  expected(3, 3) = K.from_int(-1);
  CHECK(project(o1).matrix() == expected);
}

TEST_CASE("d_epsilon examples") {
  CHECK(d_epsilon_matrix(Q, SignChange::identity(4, RootType::D), 8).matrix() == Matrix<RationalField>::identity(Q, 8));
  CHECK(d_epsilon_matrix(Q, SignChange({-1, -1, 1, 1}, RootType::D), 8).matrix() == swapped_identity(Q, 8, {1, 2}));
  auto expected = swapped_identity(Q, 7, {1});
  expected(3, 3) = -1;
  CHECK(d_epsilon_matrix(Q, SignChange({-1, 1, 1}, RootType::B), 7).matrix() == expected);
  CHECK_THROWS_AS(SignChange({-1, 1, 1, 1}, RootType::D), PreconditionError);
  CHECK_THROWS_AS(d_epsilon_matrix(Q, SignChange({-1, 1, 1}, RootType::B), 8), DimensionMismatch);
}

TEST_CASE("d_epsilon matrices are involutions in SO_m") {
  for (int m = 3; m <= 9; ++m)
    for (const auto& eps : sign_change_group(m / 2, root_type_for(m))) {
      const auto d = d_epsilon_matrix(Q, eps, m);
      CHECK((d * d).matrix() == Matrix<RationalField>::identity(Q, m));
    }
}

TEST_CASE("SO membership is enforced") {
  auto g = Matrix<RationalField>::identity(Q, 4);
  g(0, 0) = 2;
  CHECK_THROWS_AS(SOMatrix<RationalField>::make(g), MembershipError);
  // preserves the form but has determinant -1: swap e_1 and f_1 only
  auto h = swapped_identity(Q, 4, {1});
  CHECK_THROWS_AS(SOMatrix<RationalField>::make(h), MembershipError);
}

TEST_CASE("section examples") {
  const auto id = SignedPermutation::identity(4, RootType::D);
  CHECK(weyl_section(Q, id, 8).matrix() == Matrix<RationalField>::identity(Q, 8));
  // sigma = (1 2): permutation block and its mirror in the lower block
  const SignedPermutation s{SignChange::identity(4, RootType::D), {1, 0, 2, 3}};
  auto expected = Matrix<RationalField>(Q, 8, 8);
  const int image[8] = {1, 0, 2, 3, 4, 5, 7, 6};
  for (int j = 0; j < 8; ++j) expected(image[j], j) = 1;
  CHECK(weyl_section(Q, s, 8).matrix() == expected);
}

TEST_CASE("mirrored transpose block fails for a 3-cycle") {
  // The anti-diagonal transpose J M^t J in the lower block only preserves the
  // form when M is an involution; the section therefore uses J M J.
  const int m = 6;
  const std::vector<int> perm = {1, 2, 0};
  Matrix<RationalField> g(Q, m, m);
  Matrix<RationalField> mperm(Q, 3, 3);
  for (int j = 0; j < 3; ++j) mperm(perm[j], j) = 1;
  const auto j3 = Matrix<RationalField>::anti_identity(Q, 3);
  const auto lower = j3 * mperm.transpose() * j3;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      g(i, k) = mperm(i, k);
      g(3 + i, 3 + k) = lower(i, k);
    }
  CHECK_THROWS_AS(SOMatrix<RationalField>::make(g), MembershipError);
  CHECK_NOTHROW(permutation_section(Q, perm, m));
}

TEST_CASE("the section is a homomorphism on W") {
  for (int n = 1; n <= 3; ++n)
    for (auto type : {RootType::B, RootType::D}) {
      if (type == RootType::D && n < 2) continue;
      const int m = dimension_for(n, type);
      const auto group = weyl_group_elements(n, type);
      for (const auto& a : group)
        for (const auto& b : group)
          CHECK((weyl_section(Q, a, m) * weyl_section(Q, b, m)).matrix() == weyl_section(Q, compose(a, b), m).matrix());
    }
  CHECK(weyl_group_elements(2, RootType::B).size() == 8);
  CHECK(weyl_group_elements(3, RootType::B).size() == 48);
  CHECK(weyl_group_elements(3, RootType::D).size() == 24);
}

TEST_CASE("lift coherence") {
  for (int n = 1; n <= 4; ++n)
    for (auto type : {RootType::B, RootType::D}) {
      const int m = dimension_for(n, type);
      for (const auto& eps : sign_change_group(n, type))
        CHECK(project(lift_sign_change(K, eps, m)) == d_epsilon_matrix(K, eps, m));
    }
}

TEST_CASE("lifts over finite fields") {
  const PrimeField f17(17);
  const PrimeField2 f13(13);
  for (const auto& eps : sign_change_group(3, RootType::B)) {
    CHECK(project(lift_sign_change(f17, eps, 7)) == d_epsilon_matrix(f17, eps, 7));
    CHECK(project(lift_sign_change(f13, eps, 7)) == d_epsilon_matrix(f13, eps, 7));
  }
  CHECK_THROWS_AS(lift_sign_change(PrimeField(13), SignChange({-1, 1, 1}, RootType::B), 7), UnsupportedRing);
}

TEST_CASE("lift examples") {
  CHECK(lift_sign_change(K, SignChange::identity(3, RootType::B), 7).element() == MultiVector<Cyclo8Field>::one(K, 7));
  const auto w7 = lift_longest_element(K, 7).element();
  CHECK(w7 == weyl_generator(K, 1, 7) * weyl_generator(K, 2, 7) * weyl_generator(K, 3, 7));
  CHECK(w7 * w7 == MultiVector<Cyclo8Field>::one(K, 7));
  const auto w11 = lift_longest_element(K, 11).element();
  CHECK(w11 * w11 == MultiVector<Cyclo8Field>::scalar(K, 11, K.from_int(-1)));
  CHECK_THROWS_AS(lift_longest_element(K, 10), PreconditionError);
}

TEST_CASE("projection is a homomorphism with kernel +-1") {
  for (int m = 3; m <= 9; ++m) {
    const auto all = lifted_d(m);
    const auto identity = Matrix<Cyclo8Field>::identity(K, m);
    int identity_lifts = 0;
    for (const auto& g : all) {
      CHECK(project(g) == project(-g));
      if (project(g).matrix() == identity) {
        ++identity_lifts;
        const auto& x = g.element();
        CHECK((x == MultiVector<Cyclo8Field>::one(K, m) || x == -MultiVector<Cyclo8Field>::one(K, m)));
      }
    }
    CHECK(identity_lifts == 2);
  }

  std::mt19937_64 rng(41);
  for (int m : {7, 8, 9}) {
    const auto all = lifted_d(m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto ab = SpinElement<Cyclo8Field>::make(a.element() * b.element());
      CHECK(project(ab) == project(a) * project(b));
    }
  }
}

TEST_CASE("element orders") {
  CHECK(element_order(SpinElement<Cyclo8Field>::make(MultiVector<Cyclo8Field>::one(K, 7)), 8) == 1);
  CHECK(element_order(lift_longest_element(K, 7), 8) == 2);
  CHECK(element_order(lift_longest_element(K, 11), 8) == 4);
  CHECK_FALSE(element_order(lift_longest_element(K, 11), 3).has_value());
  for (int m : {7, 8, 9, 11, 12, 13, 15, 16, 17}) {
    const auto order = element_order(lift_longest_element(K, m), 8);
    REQUIRE(order.has_value());
    const bool good = m % 8 == 0 || m % 8 == 1 || m % 8 == 7;
    CHECK(*order == (good ? 2 : 4));
  }
}

TEST_CASE("extension splitting") {
  CHECK(extension_splits(1, RootType::D).splits);
  CHECK_FALSE(extension_splits(1, RootType::B).splits);
  for (int n = 2; n <= 4; ++n) {
    CHECK_FALSE(extension_splits(n, RootType::B).splits);
    CHECK_FALSE(extension_splits(n, RootType::D).splits);
  }
  const auto r = extension_splits(3, RootType::B);
  CHECK(r.group_order == 8);
  CHECK(r.cocycle[1][1] == -1);  // omega_1^2 = -1
  CHECK_THROWS_AS(extension_splits(5, RootType::B), Infeasible);
}
