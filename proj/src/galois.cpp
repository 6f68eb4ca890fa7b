#include "spinforge/galois.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace spinforge {

namespace {

void require_odd_prime(std::uint64_t l, const char* what) {
  if (l < 3 || !is_prime(l)) throw PreconditionError(std::string(what) + " must be an odd prime, got " + std::to_string(l));
}

int tower_length(int m) { return m % 2 == 1 ? m / 2 : m / 2 - 1; }

// Odometer over [0, limit]^n, most significant coordinate first.
bool advance(std::vector<std::int64_t>& v, std::int64_t limit) {
  for (std::size_t k = v.size(); k-- > 0;) {
    if (v[k] < limit) {
      ++v[k];
      return true;
    }
    v[k] = 0;
  }
  return false;
}

std::vector<std::vector<int>> legendre_table(const std::vector<std::uint64_t>& primes) {
  std::vector<std::vector<int>> table(primes.size(), std::vector<int>(primes.size(), 0));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i != j) table[i][j] = legendre(static_cast<std::int64_t>(primes[i]), primes[j]);
  return table;
}

bool all_symbols_one(const std::vector<std::uint64_t>& tower, std::uint64_t p) {
  return std::all_of(tower.begin(), tower.end(),
                     [p](std::uint64_t t) { return legendre(static_cast<std::int64_t>(t), p) == 1; });
}

// Pairings of the spin weights and the negative roots with the simple coroots.
struct PairingTables {
  std::vector<std::vector<std::int64_t>> weights;
  std::vector<std::vector<std::int64_t>> roots;
};

PairingTables pairing_tables(int m) {
  const auto datum = build_root_datum(m);
  PairingTables t;
  for (const auto& w : spin_weights(m)) {
    std::vector<std::int64_t> row;
    for (const auto& c : datum.simple_coroots) {
      const auto v = pairing(w.doubled(), c);
      if (!v.is_integer()) throw Error("spin weight pairs to a half-integer with a simple coroot");
      row.push_back(v.value());
    }
    t.weights.push_back(std::move(row));
  }
  for (const auto& r : datum.negative_roots()) {
    std::vector<int> doubled(r.coords);
    for (auto& x : doubled) x *= 2;
    std::vector<std::int64_t> row;
    for (const auto& c : datum.simple_coroots) row.push_back(pairing(doubled, c).value());
    t.roots.push_back(std::move(row));
  }
  return t;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t mod(std::int64_t a, std::uint64_t l) {
  const auto ll = static_cast<std::int64_t>(l);
  return ((a % ll) + ll) % ll;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

PrimeTower prime_tower(int count, std::uint64_t bound) {
  if (count < 1) throw PreconditionError("tower length must be >= 1");
  PrimeTower tower;
  for (std::uint64_t p = 5; static_cast<int>(tower.primes.size()) < count; p += 4) {
    if (p > bound) throw BoundExhausted("prime tower: no prime <= " + std::to_string(bound) + " extends the tower");
    if (is_prime(p) && all_symbols_one(tower.primes, p)) tower.primes.push_back(p);
  }
  for (auto p : tower.primes) tower.residues_mod4.push_back(p % 4);
  tower.legendre = legendre_table(tower.primes);
  return tower;
}

bool verify_tower(const PrimeTower& tower) {
  const auto& ps = tower.primes;
  if (ps.empty() || !std::is_sorted(ps.begin(), ps.end()) || std::adjacent_find(ps.begin(), ps.end()) != ps.end())
    return false;
  std::vector<std::uint64_t> residues;
  for (auto p : ps) {
    if (!is_prime(p) || p % 4 != 1) return false;
    residues.push_back(p % 4);
  }
  const auto table = legendre_table(ps);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (i != j && table[i][j] != 1) return false;
  return residues == tower.residues_mod4 && table == tower.legendre;
}

PairCertificate find_pair(std::uint64_t l, const std::vector<std::uint64_t>& tower, std::uint64_t bound,
                          std::uint64_t min_p) {
  require_odd_prime(l, "l");
  const std::uint64_t step = 4 * l;  // p = 1 mod 4l
  std::uint64_t p = 1 + step;
  if (min_p > p) p += (min_p - p + step - 1) / step * step;
  for (; p <= bound; p += step) {
    if (p % (l * l) == 1 || !is_prime(p) || !all_symbols_one(tower, p)) continue;
    PairCertificate c{l, p, p % 4, p % l, p % (l * l), tower, {}};
    for (auto t : tower) c.tower_symbols.push_back(legendre(static_cast<std::int64_t>(t), p));
    return c;
  }
  throw BoundExhausted("pair search: no prime <= " + std::to_string(bound) + " for l = " + std::to_string(l));
}

bool verify_pair(const PairCertificate& c) {
  if (c.l < 3 || !is_prime(c.l) || !is_prime(c.p)) return false;
  if (c.p % 4 != 1 || c.p % c.l != 1 || c.p % (c.l * c.l) == 1) return false;
  if (c.p_mod_4 != c.p % 4 || c.p_mod_l != c.p % c.l || c.p_mod_l2 != c.p % (c.l * c.l)) return false;
  if (c.tower_symbols.size() != c.tower.size()) return false;
  for (std::size_t i = 0; i < c.tower.size(); ++i) {
    const int s = legendre(static_cast<std::int64_t>(c.tower[i]), c.p);
    if (s != 1 || c.tower_symbols[i] != s) return false;
  }
  return true;
}

OrderCertificate find_order_l_prime(std::uint64_t p, std::uint64_t l, std::uint64_t bound) {
  require_odd_prime(l, "l");
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if ((p - 1) % l != 0) throw PreconditionError("l must divide p - 1");
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (!is_prime(q) || q % p == 0 || q % p == 1) continue;
    if (pow_mod(q % p, l, p) == 1) return {p, l, q, q % p, 1, l};
  }
  throw BoundExhausted("no prime q <= " + std::to_string(bound) + " of order " + std::to_string(l) + " mod " +
                       std::to_string(p));
}

bool verify_order(const OrderCertificate& c) {
  if (!is_prime(c.p) || !is_prime(c.q) || c.l < 3 || !is_prime(c.l)) return false;
  const auto r = c.q % c.p;
  if (r == 0 || r == 1 || r != c.q_mod_p) return false;
  const auto pw = pow_mod(r, c.l, c.p);
  return pw == 1 && c.q_pow_l_mod_p == pw && c.order == c.l && multiplicative_order(r, c.p) == c.l;
}

ExponentData make_exponent_data(int m, const std::vector<std::int64_t>& n_alpha, std::uint64_t l) {
  const auto tables = pairing_tables(m);
  if (n_alpha.size() != static_cast<std::size_t>(m / 2)) throw DimensionMismatch("need one n_alpha per simple root");
  ExponentData d{m, l, n_alpha, spin_weights(m), {}, {}, {}};
  for (const auto& row : tables.weights) d.e_lambda.push_back(dot(row, n_alpha));
  for (const auto& r : build_root_datum(m).negative_roots()) d.negative_roots.push_back(r.coords);
  for (const auto& row : tables.roots) d.e_beta.push_back(dot(row, n_alpha));
  return d;
}

bool check_condition4(const ExponentData& data) {
  std::set<std::int64_t> seen;
  for (auto e : data.e_lambda)
    if (!seen.insert(mod(e, data.l)).second) return false;
  return true;
}

Condition5 check_condition5(const ExponentData& data) {
  Condition5 r{true, 0, true};
  const auto l = static_cast<std::int64_t>(data.l);
  for (auto e : data.e_beta) {
    const auto a = e < 0 ? -e : e;
    r.max_abs = std::max(r.max_abs, a);
    if (a == 0 || a >= l) r.passes = false;
    if (mod(e, data.l) == 0) r.passes_mod_l = false;
  }
  return r;
}

std::optional<std::vector<std::int64_t>> find_generic_exponents(int m, std::uint64_t l, std::int64_t box) {
  if (l < 2) throw PreconditionError("l must be >= 2");
  if (box < 0) return std::nullopt;
  const auto tables = pairing_tables(m);
  const auto ll = static_cast<std::int64_t>(l);
  std::vector<std::int64_t> v(m / 2, 0);
  std::vector<char> seen(l);
  do {
    bool ok = true;
    for (const auto& row : tables.roots) {
      const auto e = dot(row, v);
      if (e == 0 || e >= ll || e <= -ll) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& row : tables.weights) {
      auto& slot = seen[mod(dot(row, v), l)];
      if (slot) {
        ok = false;
        break;
      }
      slot = 1;
    }
    if (ok) return v;
  } while (advance(v, box));
  return std::nullopt;
}

FpElem mu_l_generator(std::uint64_t p, std::uint64_t l) {
  if (!is_prime(p) || l < 2 || (p - 1) % l != 0) throw PreconditionError("mu_l needs l | p - 1");
  for (std::uint64_t x = 2; x < p; ++x) {
    const auto g = pow_mod(x, (p - 1) / l, p);
    if (g != 1) return {g, p};
  }
  throw Error("no generator of mu_l found");
}

std::vector<FpElem> weight_values(int m, const TorusPoint<PrimeField>& t) {
  const auto weights = spin_weights(m);
  if (t.t.size() != static_cast<std::size_t>(m / 2)) throw DimensionMismatch("torus point rank differs from m / 2");
  const PrimeField field(t.z.modulus);
  std::vector<FpElem> out;
  for (const auto& w : weights) {
    auto v = t.z;
    for (std::size_t i = 0; i < w.signs.size(); ++i)
      if (w.signs[i] == -1) v = v * require_inv(field, t.t[i]);
    out.push_back(v);
  }
  return out;
}

std::optional<TorusPoint<PrimeField>> find_regular_torus_point(int m, std::uint64_t l, std::uint64_t p) {
  require_odd_prime(l, "l");
  const auto g = mu_l_generator(p, l);
  const auto weights = spin_weights(m);
  const auto ll = static_cast<std::int64_t>(l);
  const std::int64_t half = (ll + 1) / 2;  // inverse of 2 mod l
  std::vector<std::int64_t> a(m / 2, 0);
  std::vector<char> seen(l);
  // Work with exponents of g: z = g^{half * sum a}, lambda(t) = g^{half * sum a - sum_{eps_i = -1} a_i}.
  do {
    std::int64_t total = 0;
    for (auto x : a) total += x;
    const std::int64_t z = half * total % ll;
    std::fill(seen.begin(), seen.end(), 0);
    bool ok = true;
    for (const auto& w : weights) {
      std::int64_t e = z;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (w.signs[i] == -1) e -= a[i];
      auto& slot = seen[mod(e, l)];
      if (slot) {
        ok = false;
        break;
      }
      slot = 1;
    }
    if (!ok) continue;
    TorusPoint<PrimeField> point{pow(g, static_cast<std::uint64_t>(z)), {}};
    for (auto x : a) point.t.push_back(pow(g, static_cast<std::uint64_t>(x)));
    return point;
  } while (advance(a, ll - 1));
  return std::nullopt;
}

bool Prop26Report::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.passed; });
}

std::optional<std::string> Prop26Report::first_failure() const {
  for (const auto& i : items)
    if (!i.passed) return i.name;
  return std::nullopt;
}

Prop26Report verify_proposition_2_6_data(const Prop26Inputs& in) {
  Prop26Report report{in.m, {}, std::nullopt};
  auto item = [&](const std::string& name, auto&& check) {
    try {
      auto [ok, detail] = check();
      report.items.push_back({name, ok, detail});
    } catch (const std::exception& e) {
      report.items.push_back({name, false, e.what()});
    }
  };
  const int m = in.m;
  const auto datum = build_root_datum(m);

  item("rho_vee_integral", [&]() -> std::pair<bool, std::string> {
    const auto rho = rho_vee(m);
    const std::string coeffs = join(rho.value.coeffs);
    if (!rho.integral) return {false, "rho^v = " + coeffs + " has odd coefficient sum"};
    const PrimeField field(in.p);
    const auto c = cochar_eval(field, rho.value, field.from_int(-1));
    const bool order_two = !c.is_identity(field) && multiply(c, c).is_identity(field);
    return {order_two, "rho^v = " + coeffs + ", rho^v(-1) has order " + (order_two ? "2" : "!= 2")};
  });
  item("prime_tower", [&]() -> std::pair<bool, std::string> {
    const bool length_ok = static_cast<int>(in.tower.primes.size()) == tower_length(m);
    return {length_ok && verify_tower(in.tower), std::to_string(in.tower.primes.size()) + " primes"};
  });
  item("pair", [&]() -> std::pair<bool, std::string> {
    PairCertificate c{in.l, in.p, in.p % 4, in.p % in.l, in.p % (in.l * in.l), in.tower.primes, {}};
    for (auto t : in.tower.primes) c.tower_symbols.push_back(legendre(static_cast<std::int64_t>(t), in.p));
    return {verify_pair(c), "l = " + std::to_string(in.l) + ", p = " + std::to_string(in.p)};
  });
  item("order_l_prime", [&]() -> std::pair<bool, std::string> {
    OrderCertificate c{in.p, in.l, in.q, in.q % in.p, pow_mod(in.q % in.p, in.l, in.p), in.l};
    return {verify_order(c), "q = " + std::to_string(in.q)};
  });
  item("coxeter_bound", [&]() -> std::pair<bool, std::string> {
    const auto h = static_cast<std::uint64_t>(datum.coxeter_number());
    return {in.l >= h, "l = " + std::to_string(in.l) + ", h = " + std::to_string(h)};
  });
  const auto data = make_exponent_data(m, in.n_alpha, in.l);
  item("condition4", [&]() -> std::pair<bool, std::string> {
    return {check_condition4(data), "n_alpha = " + join(in.n_alpha)};
  });
  item("condition5", [&]() -> std::pair<bool, std::string> {
    const auto c5 = check_condition5(data);
    return {c5.passes, "max |e_beta| = " + std::to_string(c5.max_abs) +
                           (c5.passes_mod_l ? ", nonzero mod l" : ", some e_beta = 0 mod l")};
  });
  item("transitivity", [&]() -> std::pair<bool, std::string> {
    const auto t = check_simple_transitivity(m);
    return {t.simply_transitive, "|D| = " + std::to_string(t.group_order)};
  });
  item("regular_torus_point", [&]() -> std::pair<bool, std::string> {
    report.torus_point = find_regular_torus_point(m, in.l, in.p);
    return {report.torus_point.has_value(), report.torus_point ? "found" : "none in mu_l^n"};
  });
  return report;
}

Prop26Run run_residual_pipeline(int m, std::uint64_t bound) {
  const auto datum = build_root_datum(m);
  const int n = datum.rank;
  Prop26Run run{{m, prime_tower(tower_length(m), bound), 0, 0, 0, std::vector<std::int64_t>(n, 0)},
                std::nullopt, std::nullopt, {}, {}};

  // Exponent box capped so that (box + 1)^n stays near 2e6 candidates.
  const auto cap = static_cast<std::int64_t>(std::floor(std::pow(2e6, 1.0 / n))) - 1;
  const auto weight_count = static_cast<std::uint64_t>(spin_weights(m).size());
  std::uint64_t l = std::max<std::uint64_t>({3, static_cast<std::uint64_t>(datum.coxeter_number()), weight_count});
  const std::uint64_t l_limit = std::max<std::uint64_t>(l, 4 * weight_count + 64);
  for (; l <= l_limit; ++l) {
    if (!is_prime(l)) continue;
    if (auto v = find_generic_exponents(m, l, std::min<std::int64_t>(static_cast<std::int64_t>(l) - 1, cap))) {
      run.inputs.l = l;
      run.inputs.n_alpha = *v;
      break;
    }
  }
  if (run.inputs.l == 0) {
    run.notes.push_back("no generic exponents for prime l <= " + std::to_string(l_limit));
    run.inputs.l = next_prime(std::max<std::uint64_t>(2, l_limit));
  }

  try {
    run.pair = find_pair(run.inputs.l, run.inputs.tower.primes, bound);
    run.inputs.p = run.pair->p;
    run.order = find_order_l_prime(run.inputs.p, run.inputs.l, bound);
    run.inputs.q = run.order->q;
  } catch (const BoundExhausted& e) {
    run.notes.push_back(e.what());
  }
  run.report = verify_proposition_2_6_data(run.inputs);
  return run;
}

}  // namespace spinforge
