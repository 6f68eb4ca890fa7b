#include "spinforge/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spinforge {

namespace {

std::vector<int> unit(int n, int i, int scale = 1) {
  std::vector<int> v(n, 0);
  v[i] = scale;
  return v;
}

std::vector<int> combo(int n, int i, int si, int j, int sj) {
  std::vector<int> v(n, 0);
  v[i] = si;
  v[j] = sj;
  return v;
}

int norm_squared(const std::vector<int>& v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0);
}

}  // namespace

std::vector<Root> RootDatum::positive_roots() const {
  std::vector<Root> out;
  std::copy_if(roots.begin(), roots.end(), std::back_inserter(out), [](const Root& r) { return r.height > 0; });
  return out;
}

std::vector<Root> RootDatum::negative_roots() const {
  std::vector<Root> out;
  std::copy_if(roots.begin(), roots.end(), std::back_inserter(out), [](const Root& r) { return r.height < 0; });
  return out;
}

int RootDatum::coxeter_number() const { return type == RootType::B ? 2 * rank : 2 * rank - 2; }

std::vector<int> coroot(const std::vector<int>& root) {
  const int len = norm_squared(root);
  if (len != 1 && len != 2) throw PreconditionError("not a root of B_n or D_n");
  std::vector<int> out(root);
  if (len == 1)
    for (auto& x : out) x *= 2;
  return out;
}

std::vector<int> simple_root_coefficients(const RootDatum& datum, const std::vector<int>& root) {
  // Triangular solve against chi_1 - chi_2, ..., chi_{n-1} - chi_n and the last simple root.
  const int n = datum.rank;
  std::vector<int> partial(n);
  std::partial_sum(root.begin(), root.end(), partial.begin());
  std::vector<int> c(n);
  if (datum.type == RootType::B) {
    c = partial;
  } else {
    for (int k = 0; k < n - 2; ++k) c[k] = partial[k];
    // c_{n-1} + c_n = S_{n-1}, c_n - c_{n-1} = root_n
    c[n - 1] = partial[n - 1] / 2;
    c[n - 2] = (partial[n - 2] - root[n - 1]) / 2;
  }
  return c;
}

RootDatum build_root_datum(int m) {
  if (m < 5) throw PreconditionError("root datum needs m >= 5");
  const int n = m / 2;
  RootDatum d{root_type_for(m), n, m, {}, {}, {}};
  std::vector<std::vector<int>> positive;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      positive.push_back(combo(n, i, 1, j, -1));
      positive.push_back(combo(n, i, 1, j, 1));
    }
    if (d.type == RootType::B) positive.push_back(unit(n, i));
  }
  for (int k = 0; k + 1 < n; ++k) d.simple_roots.push_back(combo(n, k, 1, k + 1, -1));
  d.simple_roots.push_back(d.type == RootType::B ? unit(n, n - 1) : combo(n, n - 2, 1, n - 1, 1));
  for (const auto& a : d.simple_roots) d.simple_coroots.push_back(coroot(a));

  for (const auto& r : positive) {
    auto c = simple_root_coefficients(d, r);
    const int h = std::accumulate(c.begin(), c.end(), 0);
    d.roots.push_back({r, h});
    std::vector<int> neg(r);
    for (auto& x : neg) x = -x;
    d.roots.push_back({neg, -h});
  }
  return d;
}

std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.value());
  return std::to_string(h.twice) + "/2";
}

HalfInteger pairing(const std::vector<int>& doubled_weight, const std::vector<int>& coweight) {
  if (doubled_weight.size() != coweight.size()) throw DimensionMismatch("pairing of different ranks");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < coweight.size(); ++i) acc += static_cast<std::int64_t>(doubled_weight[i]) * coweight[i];
  return {acc};
}

std::string to_string(const SpinWeight& w) {
  std::string out = "1/2(";
  for (std::size_t i = 0; i < w.signs.size(); ++i) {
    if (i) out += ",";
    out += w.signs[i] > 0 ? "+" : "-";
  }
  return out + ")";
}

std::vector<SpinWeight> spin_weights(int m) {
  const int n = m / 2;
  if (n < 1) throw PreconditionError("spin weights need m >= 2");
  std::vector<SpinWeight> out;
  for (const auto& eps : sign_change_group(n, root_type_for(m))) out.push_back({eps.signs()});
  return out;
}

SpinWeight d_orbit(const SignChange& eps, const SpinWeight& weight) {
  if (eps.rank() != static_cast<int>(weight.signs.size())) throw DimensionMismatch("sign change rank differs from weight rank");
  SpinWeight out = weight;
  for (int i = 0; i < eps.rank(); ++i) out.signs[i] *= eps[i];
  return out;
}

TransitivityReport check_simple_transitivity(int m) {
  const int n = m / 2;
  const auto group = sign_change_group(n, root_type_for(m));
  const auto weights = spin_weights(m);
  const SpinWeight base{std::vector<int>(n, 1)};
  std::set<SpinWeight> orbit;
  int stabilizer = 0;
  for (const auto& eps : group) {
    auto image = d_orbit(eps, base);
    if (image == base) ++stabilizer;
    orbit.insert(image);
  }
  const std::set<SpinWeight> all(weights.begin(), weights.end());
  const bool ok = orbit == all && stabilizer == 1 && group.size() == weights.size();
  return {static_cast<int>(group.size()), static_cast<int>(weights.size()), static_cast<int>(orbit.size()), stabilizer, ok};
}

std::int64_t Cocharacter::coefficient_sum() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
}

RhoVee rho_vee(int m) {
  const auto datum = build_root_datum(m);
  std::vector<std::int64_t> twice(datum.rank, 0);
  for (const auto& r : datum.positive_roots()) {
    auto c = coroot(r.coords);
    for (int i = 0; i < datum.rank; ++i) twice[i] += c[i];
  }
  Cocharacter rho;
  for (auto t : twice) {
    if (t % 2 != 0) throw PreconditionError("half-sum of coroots left the lambda-lattice");
    rho.coeffs.push_back(t / 2);
  }
  return {rho, rho.in_lattice()};
}

CartanReport cartan_involution_check(int m) {
  if (!rho_vee(m).integral) throw PreconditionError("rho^v is not a cocharacter of T for m = " + std::to_string(m));
  const auto datum = build_root_datum(m);
  int even = 0;
  for (const auto& r : datum.roots)
    if (r.height % 2 == 0) ++even;
  const int roots = static_cast<int>(datum.roots.size());
  const int fixed = datum.rank + even;
  return {m, datum.rank, roots, even, fixed, roots / 2, 2 * fixed == roots};
}

std::string to_string(FormType t) {
  switch (t) {
    case FormType::Symmetric:
      return "symmetric";
    case FormType::Skew:
      return "skew";
    case FormType::None:
      return "none";
  }
  return "?";
}

ParityReport parity_classify(int m) {
  if (m < 5) throw PreconditionError("parity classification needs m >= 5");
  const int n = m / 2;
  ParityReport r{m, false, FormType::None, false, 0};
  r.w0_minus_one = (m % 2 == 1) || (n % 2 == 0);
  if (m % 2 == 1) {
    r.form_type = (n % 4 == 0 || n % 4 == 3) ? FormType::Symmetric : FormType::Skew;
  } else if (n % 2 == 0) {
    r.form_type = n % 4 == 0 ? FormType::Symmetric : FormType::Skew;
  }
  // (w_1 ... w_n)^2 = (-1)^{n(n+1)/2}
  r.w0_lift_order = (n * (n + 1) / 2) % 2 == 0 ? 2 : 4;
  r.qualifies = m >= 7 && (m % 8 == 0 || m % 8 == 1 || m % 8 == 7);
  return r;
}

LParamReport lparam_descent(int n, const std::vector<std::int64_t>& m_vec) {
  if (n < 1 || static_cast<int>(m_vec.size()) != n) throw PreconditionError("lparam needs n entries");
  const std::int64_t sum = std::accumulate(m_vec.begin(), m_vec.end(), std::int64_t{0});
  const auto parity = [](std::int64_t x) { return ((x % 2) + 2) % 2; };
  LParamReport r{};
  r.descends = parity(sum) == parity(static_cast<std::int64_t>(n) * (n + 1) / 2);
  r.l_algebraic = r.descends && (n % 4 == 0 || n % 4 == 3) && parity(sum) == 0;
  std::set<std::int64_t> distinct(m_vec.begin(), m_vec.end());
  r.regular = static_cast<int>(distinct.size()) == n && *distinct.begin() > 0;
  return r;
}

}  // namespace spinforge
