#include "spinforge/spingroup.hpp"

#include <bit>

namespace spinforge {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::GSpin:
      return "gspin";
    case Membership::Spin:
      return "spin";
    case Membership::Neither:
      return "neither";
  }
  return "?";
}

ExtensionResult extension_splits(int n, RootType type) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  const auto group = sign_change_group(n, type);
  const int order = static_cast<int>(group.size());
  if (order > 16) throw Infeasible("exhaustive section search needs |D| <= 16, got " + std::to_string(order));

  const int m = dimension_for(n, type);
  const Cyclo8Field field;
  std::vector<MultiVector<Cyclo8Field>> lifts;
  std::vector<int> index_of(1u << n, -1);
  for (int k = 0; k < order; ++k) {
    lifts.push_back(lift_sign_change(field, group[k], m).element());
    index_of[group[k].mask()] = k;
  }

  ExtensionResult result{type, n, order, false, {}, {}, {}};
  for (const auto& d : group) result.elements.push_back(d.mask());

  // cocycle[a][b] = +-1 with L(a) L(b) = c L(ab); product[a][b] = index of ab
  std::vector<std::vector<int>> product(order, std::vector<int>(order));
  result.cocycle.assign(order, std::vector<int>(order, 0));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ab = index_of[group[a].mask() ^ group[b].mask()];
      product[a][b] = ab;
      const auto lhs = lifts[a] * lifts[b];
      if (lhs == lifts[ab]) result.cocycle[a][b] = 1;
      else if (lhs == -lifts[ab]) result.cocycle[a][b] = -1;
      else throw MembershipError("canonical lifts are not closed under products up to sign");
    }
  }

  // A choice s(d) = (-1)^{bit d of choice} L(d) is multiplicative iff
  // sign(a) sign(b) c(a, b) = sign(ab) for every pair.
  const std::uint64_t total = std::uint64_t{1} << order;
  for (std::uint64_t choice = 0; choice < total; ++choice) {
    auto sign = [&](int k) { return (choice >> k & 1) ? -1 : 1; };
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) {
      for (int b = 0; b < order; ++b) {
        if (sign(a) * sign(b) * result.cocycle[a][b] != sign(product[a][b])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      result.splits = true;
      for (int k = 0; k < order; ++k) result.section_signs.push_back(sign(k));
      return result;
    }
  }
  return result;
}

}  // namespace spinforge
