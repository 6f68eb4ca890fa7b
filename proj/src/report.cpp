#include "spinforge/report.hpp"

namespace spinforge {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

Json to_json(const ParityReport& r) {
  return {{"m", str(r.m)},
          {"qualifies", r.qualifies},
          {"form", to_string(r.form_type)},
          {"w0_order", str(r.w0_lift_order)},
          {"w0_minus_one", r.w0_minus_one}};
}

Json to_json(const CartanReport& r) {
  return {{"m", str(r.m)},
          {"rank", str(r.rank)},
          {"root_count", str(r.root_count)},
          {"even_height_roots", str(r.even_height_roots)},
          {"fixed_dimension", str(r.fixed_dimension)},
          {"half_root_count", str(r.half_root_count)},
          {"split", r.split}};
}

Json to_json(const TransitivityReport& r) {
  return {{"group_order", str(r.group_order)},
          {"weight_count", str(r.weight_count)},
          {"orbit_size", str(r.orbit_size)},
          {"stabilizer_size", str(r.stabilizer_size)},
          {"simply_transitive", r.simply_transitive}};
}

Json to_json(const RhoVee& r) {
  return {{"coefficients", decimal_array(r.value.coeffs)},
          {"coefficient_sum", str(r.value.coefficient_sum())},
          {"integral", r.integral}};
}

Json to_json(const LParamReport& r) {
  return {{"descends", r.descends}, {"l_algebraic", r.l_algebraic}, {"regular", r.regular}};
}

Json to_json(const ExtensionResult& r) {
  Json out = {{"type", to_string(r.type)},
              {"rank", str(r.rank)},
              {"group_order", str(r.group_order)},
              {"splits", r.splits},
              {"elements", decimal_array(r.elements)}};
  if (r.splits) out["section_signs"] = decimal_array(r.section_signs);
  Json cocycle = Json::array();
  for (const auto& row : r.cocycle) cocycle.push_back(decimal_array(row));
  out["cocycle"] = std::move(cocycle);
  return out;
}

Json to_json(const FormClassification& r) {
  return {{"m", str(r.m)},
          {"dimension", std::to_string(r.module_dimension)},
          {"symmetry", to_string(r.symmetry)},
          {"ring", r.ring},
          {"primes", decimal_array(r.primes)}};
}

Json to_json(const PrimeTower& t) {
  Json table = Json::array();
  for (const auto& row : t.legendre) table.push_back(decimal_array(row));
  return {{"primes", decimal_array(t.primes)}, {"residues_mod_4", decimal_array(t.residues_mod4)}, {"legendre", table}};
}

Json to_json(const PairCertificate& c) {
  return {{"l", std::to_string(c.l)},
          {"p", std::to_string(c.p)},
          {"p_mod_4", std::to_string(c.p_mod_4)},
          {"p_mod_l", std::to_string(c.p_mod_l)},
          {"p_mod_l2", std::to_string(c.p_mod_l2)},
          {"tower", decimal_array(c.tower)},
          {"tower_symbols", decimal_array(c.tower_symbols)}};
}

Json to_json(const OrderCertificate& c) {
  return {{"p", std::to_string(c.p)},
          {"l", std::to_string(c.l)},
          {"q", std::to_string(c.q)},
          {"q_mod_p", std::to_string(c.q_mod_p)},
          {"q_pow_l_mod_p", std::to_string(c.q_pow_l_mod_p)},
          {"order", std::to_string(c.order)}};
}

Json to_json(const ExponentData& d) {
  Json weights = Json::array();
  for (const auto& w : d.weights) weights.push_back(to_string(w));
  Json roots = Json::array();
  for (const auto& r : d.negative_roots) roots.push_back(decimal_array(r));
  const auto c5 = check_condition5(d);
  return {{"m", str(d.m)},
          {"l", std::to_string(d.l)},
          {"n_alpha", decimal_array(d.n_alpha)},
          {"weights", weights},
          {"e_lambda", decimal_array(d.e_lambda)},
          {"negative_roots", roots},
          {"e_beta", decimal_array(d.e_beta)},
          {"condition4", check_condition4(d)},
          {"condition5", c5.passes},
          {"condition5_mod_l", c5.passes_mod_l},
          {"max_abs_e_beta", str(c5.max_abs)}};
}

Json to_json(const TorusPoint<PrimeField>& t) {
  Json ts = Json::array();
  for (const auto& x : t.t) ts.push_back(std::to_string(x.residue));
  return {{"modulus", std::to_string(t.z.modulus)}, {"z", std::to_string(t.z.residue)}, {"t", ts}};
}

Json to_json(const Prop26Report& r) {
  Json items = Json::array();
  for (const auto& i : r.items) items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  Json out = {{"m", str(r.m)}, {"passed", r.passed()}, {"items", items}};
  if (auto f = r.first_failure()) out["first_failure"] = *f;
  return out;
}

Json to_json(const Prop26Run& run) {
  Json cert = {{"tower", to_json(run.inputs.tower)},
               {"l", std::to_string(run.inputs.l)},
               {"p", std::to_string(run.inputs.p)},
               {"q", std::to_string(run.inputs.q)},
               {"n_alpha", decimal_array(run.inputs.n_alpha)}};
  if (run.pair) cert["pair"] = to_json(*run.pair);
  if (run.order) cert["order"] = to_json(*run.order);
  cert["exponents"] = to_json(make_exponent_data(run.inputs.m, run.inputs.n_alpha, run.inputs.l));
  if (run.report.torus_point) cert["torus_point"] = to_json(*run.report.torus_point);
  Json out = to_json(run.report);
  out["certificate"] = std::move(cert);
  if (!run.notes.empty()) out["notes"] = run.notes;
  return out;
}

}  // namespace spinforge
