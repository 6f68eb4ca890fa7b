// spinforge: JSON front end for the spin-group, spin-representation and
// prime-search routines. Exit status: 0 pass/found, 1 fail/absent, 2 usage error.

#include "spinforge/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace spinforge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Output {
  bool pretty = false;

  int emit(const Json& j, bool ok) const {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    return ok ? kPass : kFail;
  }
};

std::uint64_t default_bound() {
  if (const char* env = std::getenv("SPINFORGE_BOUND")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("SPINFORGE_BOUND must be a positive integer");
  }
  return kDefaultSearchBound;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

void require_m(int m) {
  if (m < 5 || m > kMaxDimension) throw PreconditionError("m must lie in [5, 31], got " + std::to_string(m));
}

template <CoefficientField F>
int project_with(const F& field, int m, const std::string& text, const Output& out) {
  const auto g = parse_multivector(field, m, text);
  const auto membership = is_gspin(g);
  Json j = {{"m", std::to_string(m)}, {"ring", field.name()}, {"element", to_string(g)},
            {"membership", to_string(membership)}};
  if (membership != Membership::Spin) return out.emit(j, false);
  const auto s = SpinElement<F>::make(g);
  j["matrix"] = matrix_json(project(s).matrix());
  return out.emit(j, true);
}

int cmd_sign_law(int m, int k, const Output& out) {
  require_m(m);
  if (k < 1 || k > m / 2) throw PreconditionError("k must lie in [1, n]");
  const Cyclo8Field field;
  auto g = MultiVector<Cyclo8Field>::one(field, m);
  for (int i = 1; i <= k; ++i) g = g * weyl_generator(field, i, m);
  const auto square = g * g;
  const int expected = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
  const bool holds = square == MultiVector<Cyclo8Field>::scalar(field, m, field.from_int(expected));
  return out.emit({{"m", std::to_string(m)}, {"k", std::to_string(k)}, {"square", to_string(square)},
                   {"expected", std::to_string(expected)}, {"holds", holds}},
                  holds);
}

int cmd_invariant_form(int m, const Output& out) {
  require_m(m);
  const auto c = classify_invariant_form(m);
  const auto expected = parity_classify(m).form_type;
  const bool agrees = (c.symmetry == FormSymmetry::Symmetric && expected == FormType::Symmetric) ||
                      (c.symmetry == FormSymmetry::Skew && expected == FormType::Skew) ||
                      (c.symmetry == FormSymmetry::NotSelfDual && expected == FormType::None);
  auto j = to_json(c);
  j["expected"] = to_string(expected);
  j["agrees"] = agrees;
  return out.emit(j, agrees);
}

int cmd_weights(int m, const Output& out) {
  require_m(m);
  auto expected = spin_weights(m);
  auto observed = torus_weight_diagnostics(m);
  Json list = Json::array();
  for (const auto& w : expected) list.push_back(to_string(w));
  std::sort(expected.begin(), expected.end());
  std::sort(observed.begin(), observed.end());
  const bool match = expected == observed;
  return out.emit({{"m", std::to_string(m)}, {"count", std::to_string(expected.size())}, {"weights", list},
                   {"diagnostics_match", match}},
                  match);
}

int cmd_exponents(int m, std::uint64_t l, std::optional<std::int64_t> box, const Output& out) {
  require_m(m);
  const int n = m / 2;
  const auto cap = static_cast<std::int64_t>(std::floor(std::pow(2e6, 1.0 / n))) - 1;
  const std::int64_t used_box = box ? *box : std::min<std::int64_t>(static_cast<std::int64_t>(l) - 1, cap);
  const auto found = find_generic_exponents(m, l, used_box);
  Json j = {{"m", std::to_string(m)}, {"l", std::to_string(l)}, {"box", std::to_string(used_box)},
            {"found", found.has_value()}};
  if (found) j["data"] = to_json(make_exponent_data(m, *found, l));
  return out.emit(j, found.has_value());
}

int cmd_torus_point(int m, std::uint64_t l, std::uint64_t p, const Output& out) {
  require_m(m);
  const auto t = find_regular_torus_point(m, l, p);
  Json j = {{"m", std::to_string(m)}, {"l", std::to_string(l)}, {"p", std::to_string(p)}, {"found", t.has_value()}};
  if (t) {
    j["point"] = to_json(*t);
    Json values = Json::array();
    for (const auto& v : weight_values(m, *t)) values.push_back(std::to_string(v.residue));
    j["weight_values"] = values;
  }
  return out.emit(j, t.has_value());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin groups, spin representations and the prime searches around them"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--pretty", out.pretty, "Indent JSON output");

  int m = 0, k = 0, n = 0;
  std::uint64_t l = 0, p = 0;
  std::optional<std::uint64_t> bound;
  std::optional<std::int64_t> box;
  std::string text, type, ring = "cyclo8", list;
  std::uint64_t min_p = 0;

  auto* parity = app.add_subcommand("parity", "Parity classification of m");
  parity->add_option("m", m)->required();
  auto* sign_law = app.add_subcommand("sign-law", "Square of the first k Weyl lifts");
  sign_law->add_option("m", m)->required();
  sign_law->add_option("k", k)->required();
  auto* proj = app.add_subcommand("project", "Covering map of a Spin element");
  proj->add_option("multivector", text)->required();
  proj->add_option("--m", m, "Ambient dimension")->required();
  proj->add_option("--ring", ring, "q | cyclo8 | fp:P");
  auto* form = app.add_subcommand("invariant-form", "Invariant bilinear form on the spin module");
  form->add_option("m", m)->required();
  auto* weights = app.add_subcommand("weights", "Spin weights and torus diagnostics");
  weights->add_option("m", m)->required();
  auto* trans = app.add_subcommand("transitivity", "Simple transitivity of D on the spin weights");
  trans->add_option("m", m)->required();
  auto* rho = app.add_subcommand("rho-vee", "Half-sum of positive coroots");
  rho->add_option("m", m)->required();
  auto* cartan = app.add_subcommand("cartan", "Split Cartan involution criterion");
  cartan->add_option("m", m)->required();
  auto* ext = app.add_subcommand("extension", "Exhaustive section search for D~ -> D");
  ext->add_option("n", n)->required();
  ext->add_option("type", type, "B or D")->required();
  auto* tower = app.add_subcommand("tower", "Prime tower of 1 mod 4 primes, pairwise residues");
  tower->add_option("n", n)->required();
  tower->add_option("--bound", bound);
  auto* pair = app.add_subcommand("pair", "Smallest split prime p for l");
  pair->add_option("l", l)->required();
  pair->add_option("--tower", list, "Comma-separated tower primes");
  pair->add_option("--bound", bound);
  pair->add_option("--min-p", min_p);
  auto* order = app.add_subcommand("order-prime", "Smallest prime of order l mod p");
  order->add_option("p", p)->required();
  order->add_option("l", l)->required();
  order->add_option("--bound", bound);
  auto* expo = app.add_subcommand("exponents", "Smallest generic exponent vector");
  expo->add_option("m", m)->required();
  expo->add_option("l", l)->required();
  expo->add_option("--box", box);
  auto* torus = app.add_subcommand("torus-point", "Regular torus point in mu_l^n over F_p");
  torus->add_option("m", m)->required();
  torus->add_option("l", l)->required();
  torus->add_option("p", p)->required();
  auto* prop = app.add_subcommand("prop26", "Full residual-representation pipeline");
  prop->add_option("m", m)->required();
  prop->add_option("--bound", bound);
  auto* lparam = app.add_subcommand("lparam", "Descent parities of an L-parameter");
  lparam->add_option("n", n)->required();
  lparam->add_option("exponents", list, "m1,...,mn")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    const std::uint64_t search_bound = bound ? *bound : default_bound();
    if (parity->parsed()) {
      const auto r = parity_classify(m);
      return out.emit(to_json(r), r.qualifies);
    }
    if (sign_law->parsed()) return cmd_sign_law(m, k, out);
    if (proj->parsed()) {
      check_dimension(m);
      if (ring == "q") return project_with(RationalField{}, m, text, out);
      if (ring == "cyclo8") return project_with(Cyclo8Field{}, m, text, out);
      if (ring.rfind("fp:", 0) == 0) return project_with(PrimeField(std::stoull(ring.substr(3))), m, text, out);
      throw ParseError("unknown ring '" + ring + "' (expected q, cyclo8 or fp:P)");
    }
    if (form->parsed()) return cmd_invariant_form(m, out);
    if (weights->parsed()) return cmd_weights(m, out);
    if (trans->parsed()) {
      require_m(m);
      const auto r = check_simple_transitivity(m);
      return out.emit(to_json(r), r.simply_transitive);
    }
    if (rho->parsed()) {
      require_m(m);
      const auto r = rho_vee(m);
      auto j = to_json(r);
      j["m"] = std::to_string(m);
      return out.emit(j, r.integral);
    }
    if (cartan->parsed()) {
      require_m(m);
      const auto r = cartan_involution_check(m);
      return out.emit(to_json(r), r.split);
    }
    if (ext->parsed()) {
      const auto r = extension_splits(n, parse_root_type(type));
      return out.emit(to_json(r), r.splits);
    }
    if (tower->parsed()) return out.emit(to_json(prime_tower(n, search_bound)), true);
    if (pair->parsed()) {
      std::vector<std::uint64_t> primes;
      if (!list.empty())
        for (auto v : parse_int_list(list)) {
          if (v < 2) throw ParseError("tower primes must be >= 2");
          primes.push_back(static_cast<std::uint64_t>(v));
        }
      return out.emit(to_json(find_pair(l, primes, search_bound, min_p)), true);
    }
    if (order->parsed()) return out.emit(to_json(find_order_l_prime(p, l, search_bound)), true);
    if (expo->parsed()) return cmd_exponents(m, l, box, out);
    if (torus->parsed()) return cmd_torus_point(m, l, p, out);
    if (prop->parsed()) {
      require_m(m);
      const auto run = run_residual_pipeline(m, search_bound);
      return out.emit(to_json(run), run.report.passed());
    }
    if (lparam->parsed()) {
      const auto r = lparam_descent(n, parse_int_list(list));
      if (!r.regular) std::cerr << "warning: exponents are not distinct positive integers\n";
      return out.emit(to_json(r), r.descends);
    }
  } catch (const BoundExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kFail;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
