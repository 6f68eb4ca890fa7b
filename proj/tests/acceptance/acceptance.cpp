// Runs every acceptance criterion at its exact time limit and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include "../oracles.hpp"

#include "json.hpp"
#include "spinforge/galois.hpp"
#include "spinforge/spinrep.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace spinforge;
using Json = nlohmann::json;

namespace {

const Cyclo8Field K;
const RationalField Q;

// Thrown by a criterion body with a short reason.
struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string command = std::string(SPINFORGE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw Failed{"cannot start " + command};
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::uint64_t num(const Json& j) { return std::stoull(j.get<std::string>()); }
std::int64_t snum(const Json& j) { return std::stoll(j.get<std::string>()); }

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const Failed& f) {
    ok = false;
    detail = f.why;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && elapsed >= limit_seconds) {
    ok = false;
    detail = "over the time limit";
  }
  if (!ok) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "  [" << elapsed << " s / " << limit_seconds << " s]";
  if (!detail.empty()) line << "  " << detail;
  std::cout << line.str() << std::endl;
}

// 1
std::string sign_law() {
  int checks = 0;
  for (int m : {7, 8, 9, 11, 12, 15, 16}) {
    auto g = MultiVector<Cyclo8Field>::one(K, m);
    for (int k = 1; k <= m / 2; ++k) {
      g = g * weyl_generator(K, k, m);
      const int sign = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
      expect(g * g == MultiVector<Cyclo8Field>::scalar(K, m, K.from_int(sign)),
             "m = " + std::to_string(m) + ", k = " + std::to_string(k));
      ++checks;
    }
  }
  return std::to_string(checks) + " squares";
}

// 2
std::string form_classification() {
  std::string out;
  for (int m : {7, 8, 9, 11, 12, 13, 15, 16}) {
    const bool symmetric = m % 8 == 0 || m % 8 == 1 || m % 8 == 7;
    const auto c = classify_invariant_form(m);
    expect(c.symmetry == (symmetric ? FormSymmetry::Symmetric : FormSymmetry::Skew), "m = " + std::to_string(m));
    if (c.module_dimension > 32) expect(c.ring == "F_p" && c.primes.size() == 2, "m = " + std::to_string(m) + " needs two primes");
    out += std::to_string(m) + (symmetric ? "s " : "a ");
  }
  return out;
}

// 3
std::string covering() {
  int lifts = 0;
  for (int n = 1; n <= 4; ++n)
    for (auto type : {RootType::B, RootType::D}) {
      const int m = dimension_for(n, type);
      for (const auto& eps : sign_change_group(n, type)) {
        expect(project(lift_sign_change(K, eps, m)) == d_epsilon_matrix(K, eps, m), "lift of eps, m = " + std::to_string(m));
        ++lifts;
      }
    }
  std::mt19937_64 rng(2718);
  const int m = 9;
  std::vector<SpinElement<Cyclo8Field>> cover;
  for (const auto& eps : sign_change_group(4, RootType::B)) {
    const auto g = lift_sign_change(K, eps, m);
    cover.push_back(g);
    cover.push_back(-g);
  }
  std::uniform_int_distribution<std::size_t> pick(0, cover.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const auto& a = cover[pick(rng)];
    const auto& b = cover[pick(rng)];
    expect(project(SpinElement<Cyclo8Field>::make(a.element() * b.element())) == project(a) * project(b), "pi not multiplicative");
  }
  return std::to_string(lifts) + " lifts, 100 pairs";
}

// 4
std::string transitivity() {
  for (int n = 3; n <= 8; ++n)
    for (int m : {2 * n, 2 * n + 1}) {
      const auto r = check_simple_transitivity(m);
      expect(r.simply_transitive && r.orbit_size == r.weight_count && r.stabilizer_size == 1, "m = " + std::to_string(m));
      // every weight, not just the base point
      const auto group = sign_change_group(n, root_type_for(m));
      for (const auto& w : spin_weights(m)) {
        std::set<SpinWeight> orbit;
        for (const auto& eps : group) orbit.insert(d_orbit(eps, w));
        expect(orbit.size() == group.size(), "orbit size, m = " + std::to_string(m));
      }
    }
  return "m = 6..17";
}

// 5
std::string section() {
  std::size_t pairs = 0;
  for (int n = 1; n <= 3; ++n)
    for (auto type : {RootType::B, RootType::D}) {
      if (type == RootType::D && n < 2) continue;
      const int m = dimension_for(n, type);
      const auto group = weyl_group_elements(n, type);
      std::vector<SOMatrix<RationalField>> images;
      for (const auto& w : group) images.push_back(weyl_section(Q, w, m));
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = 0; b < group.size(); ++b) {
          expect((images[a] * images[b]).matrix() == weyl_section(Q, compose(group[a], group[b]), m).matrix(),
                 "m = " + std::to_string(m));
          ++pairs;
        }
    }
  return std::to_string(pairs) + " products";
}

// 6
std::string extension() {
  for (int n = 2; n <= 4; ++n)
    for (auto type : {RootType::B, RootType::D})
      expect(!extension_splits(n, type).splits, "splits for n = " + std::to_string(n));
  std::string out;
  for (int m : {7, 8, 9, 11, 12, 13, 15, 16, 17}) {
    const int expected = (m == 11 || m == 12 || m == 13) ? 4 : 2;
    const auto order = element_order(lift_longest_element(K, m), 8);
    expect(order && *order == expected, "w0 lift order, m = " + std::to_string(m));
    out += std::to_string(m) + ":" + std::to_string(*order) + " ";
  }
  return out;
}

// 7
std::string rho_integrality() {
  for (int n = 3; n <= 12; ++n) {
    expect(rho_vee(2 * n + 1).integral == (n % 4 == 0 || n % 4 == 3), "B_" + std::to_string(n));
    expect(rho_vee(2 * n).integral == (n % 4 == 0 || n % 4 == 1), "D_" + std::to_string(n));
  }
  return "n = 3..12";
}

// 8
std::string split_cartan() {
  std::string out;
  for (int m = 5; m <= 17; ++m) {
    if (!parity_classify(m).qualifies) continue;
    const auto r = cartan_involution_check(m);
    expect(r.split && r.fixed_dimension == r.half_root_count, "m = " + std::to_string(m));
    out += std::to_string(m) + " ";
  }
  for (int m : {7, 8, 9}) {
    const auto c = cartan_fixed_space(m);
    expect(c.agrees && c.fixed_dimension == c.half_root_count, "fixed space, m = " + std::to_string(m));
  }
  return "qualifying m: " + out;
}

// 9
std::string tower_cli() {
  const auto first = cli("tower 4");
  const auto second = cli("tower 4");
  expect(first.code == 0, "exit code " + std::to_string(first.code));
  expect(first.out == second.out, "output differs between runs");
  const auto j = Json::parse(first.out);
  std::vector<std::uint64_t> primes;
  for (const auto& p : j["primes"]) primes.push_back(num(p));
  expect(primes.size() == 4, "four primes");
  for (std::size_t i = 0; i < 4; ++i) {
    expect(oracle::is_prime(primes[i]) && primes[i] % 4 == 1, "p = " + std::to_string(primes[i]));
    expect(num(j["residues_mod_4"][i]) == primes[i] % 4, "residue table");
    if (i) expect(primes[i] > primes[i - 1], "increasing");
    for (std::size_t k = 0; k < 4; ++k) {
      const int symbol = i == k ? 0 : oracle::euler_legendre(primes[i], primes[k]);
      expect(snum(j["legendre"][i][k]) == symbol, "legendre table");
      if (i != k) expect(symbol == 1, "symbol not 1");
    }
  }
  std::string out;
  for (auto p : primes) out += std::to_string(p) + " ";
  return out;
}

// 10
std::string prop26_cli() {
  const auto run7 = cli("prop26 7");
  expect(run7.code == 0, "prop26 7 exit code " + std::to_string(run7.code));
  const auto j = Json::parse(run7.out);
  expect(j["passed"] == true, "prop26 7 not passed");
  for (const auto& item : j["items"]) expect(item["passed"] == true, "item " + item["name"].get<std::string>());

  const auto& c = j["certificate"];
  const auto l = num(c["l"]), p = num(c["p"]), q = num(c["q"]);
  std::vector<std::uint64_t> tower;
  for (const auto& x : c["tower"]["primes"]) tower.push_back(num(x));
  expect(tower.size() == 3, "tower length n = 3");
  for (std::size_t i = 0; i < tower.size(); ++i) {
    expect(oracle::is_prime(tower[i]) && tower[i] % 4 == 1, "tower prime");
    for (std::size_t k = 0; k < tower.size(); ++k)
      if (i != k) expect(oracle::euler_legendre(tower[i], tower[k]) == 1, "tower symbol");
  }
  // pair facts
  expect(oracle::is_prime(l) && l % 2 == 1 && l >= 6, "l prime and at least h");
  expect(oracle::is_prime(p), "p prime");
  expect(p % 4 == 1 && num(c["pair"]["p_mod_4"]) == 1, "p = 1 mod 4");
  expect(p % l == 1 && num(c["pair"]["p_mod_l"]) == 1, "p = 1 mod l");
  expect(p % (l * l) != 1 && num(c["pair"]["p_mod_l2"]) == p % (l * l), "p != 1 mod l^2");
  for (std::size_t i = 0; i < tower.size(); ++i) {
    expect(oracle::euler_legendre(tower[i], p) == 1, "(p_i | p) = 1");
    expect(snum(c["pair"]["tower_symbols"][i]) == 1, "recorded symbol");
  }
  // order facts
  expect(oracle::is_prime(q), "q prime");
  expect(oracle::pow_mod(q, l, p) == 1 && q % p != 1, "q has order l mod p");
  expect(oracle::order(q, p) == l && num(c["order"]["order"]) == l, "recorded order");
  expect(num(c["order"]["q_pow_l_mod_p"]) == 1 && num(c["order"]["q_mod_p"]) == q % p, "recorded residues");
  // exponent facts
  std::vector<std::int64_t> n_alpha;
  for (const auto& x : c["n_alpha"]) n_alpha.push_back(snum(x));
  expect(oracle::exponents_generic(7, l, n_alpha), "conditions 4 and 5");
  const auto tables = oracle::exponent_tables(7, n_alpha);
  std::multiset<std::int64_t> mine(tables.e_lambda.begin(), tables.e_lambda.end()), theirs;
  for (const auto& x : c["exponents"]["e_lambda"]) theirs.insert(snum(x));
  expect(mine == theirs, "e_lambda table");
  // torus point: t_i in mu_l, z = (prod t_i)^{(l+1)/2}, eight distinct weight values
  const auto& tp = c["torus_point"];
  expect(num(tp["modulus"]) == p, "torus point modulus");
  const auto z = num(tp["z"]);
  std::vector<std::uint64_t> t;
  for (const auto& x : tp["t"]) t.push_back(num(x));
  std::uint64_t prod = 1;
  for (auto ti : t) {
    expect(oracle::pow_mod(ti, l, p) == 1, "t_i in mu_l");
    prod = oracle::mulmod(prod, ti, p);
  }
  expect(oracle::mulmod(z, z, p) == prod, "z^2 = prod t_i");
  expect(oracle::pow_mod(prod, (l + 1) / 2, p) == z, "z = (prod t_i)^((l+1)/2)");
  std::set<std::uint64_t> values;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::uint64_t v = z;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) v = oracle::mulmod(v, oracle::pow_mod(t[i], p - 2, p), p);
    values.insert(v);
  }
  expect(values.size() == 8, "weight values distinct");

  const auto run11 = cli("prop26 11");
  expect(run11.code == 1, "prop26 11 exit code " + std::to_string(run11.code));
  const auto k = Json::parse(run11.out);
  expect(k["passed"] == false, "prop26 11 passed");
  std::string first_failure;
  for (const auto& item : k["items"])
    if (item["passed"] == false) {
      first_failure = item["name"];
      break;
    }
  expect(first_failure == "rho_vee_integral", "prop26 11 first failure: " + first_failure);
  return "l = " + std::to_string(l) + ", p = " + std::to_string(p) + ", q = " + std::to_string(q);
}

// 11
std::string lparam_grid() {
  long tuples = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::int64_t> v;
    std::function<void(unsigned)> rec = [&](unsigned used) {
      if (static_cast<int>(v.size()) == n) {
        std::int64_t sum = 0;
        for (auto x : v) sum += x;
        const bool lifts = ((n * (n + 1) / 2) % 2) == (sum % 2);
        const auto r = lparam_descent(n, v);
        expect(r.descends == lifts, "descent parity");
        expect(r.l_algebraic == (lifts && (n % 4 == 0 || n % 4 == 3) && sum % 2 == 0), "L-algebraic parity");
        ++tuples;
        return;
      }
      for (int x = 1; x <= 8; ++x) {
        if (used >> x & 1) continue;
        v.push_back(x);
        rec(used | 1u << x);
        v.pop_back();
      }
    };
    rec(0);
  }
  return std::to_string(tuples) + " tuples";
}

}  // namespace

int main() {
  criterion(1, "sign law for lifted Weyl products", 5, sign_law);
  criterion(2, "invariant form symmetric/skew classification", 120, form_classification);
  criterion(3, "covering map on lifts and random pairs", 10, covering);
  criterion(4, "simple transitivity of D on spin weights", 5, transitivity);
  criterion(5, "section is a homomorphism on W", 10, section);
  criterion(6, "extension does not split; w0 lift orders", 30, extension);
  criterion(7, "rho_vee integrality mod 4 rules", 1, rho_integrality);
  criterion(8, "split Cartan criterion and fixed-space cross-check", 60, split_cartan);
  criterion(9, "prime tower via CLI, re-verified", 10, tower_cli);
  criterion(10, "prop26 via CLI, certificate re-verified", 60, prop26_cli);
  criterion(11, "L-parameter descent parities", 5, lparam_grid);
  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " of 11" : std::string("all 11 criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
