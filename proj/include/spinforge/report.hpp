#pragma once

// JSON views of reports and certificates. Every integer is written as a decimal
// string so arbitrary-precision consumers never lose digits.

#include "spinforge/galois.hpp"
#include "spinforge/linalg.hpp"
#include "spinforge/rootdata.hpp"
#include "spinforge/spingroup.hpp"
#include "spinforge/spinrep.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace spinforge {

using Json = nlohmann::ordered_json;

template <class T>
Json decimal_array(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

template <CoefficientField F>
Json matrix_json(const Matrix<F>& a) {
  return Json(matrix_to_strings(a));
}

Json to_json(const ParityReport& r);
Json to_json(const CartanReport& r);
Json to_json(const TransitivityReport& r);
Json to_json(const RhoVee& r);
Json to_json(const LParamReport& r);
Json to_json(const ExtensionResult& r);
Json to_json(const FormClassification& r);
Json to_json(const PrimeTower& t);
Json to_json(const PairCertificate& c);
Json to_json(const OrderCertificate& c);
Json to_json(const ExponentData& d);
Json to_json(const TorusPoint<PrimeField>& t);
Json to_json(const Prop26Report& r);
Json to_json(const Prop26Run& run);

}  // namespace spinforge
