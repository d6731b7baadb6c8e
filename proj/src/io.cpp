#include "cuntz/io.hpp"

#include <sstream>

namespace cuntz {
namespace {

std::string real_text(const Real& r) {
  std::ostringstream os;
  os.precision(Real::default_precision());
  os << std::scientific << r;
  return os.str();
}

Real real_from(const Json& j) {
  if (j.is_string()) return Real(j.get<std::string>());
  if (j.is_number()) return Real(j.get<double>());
  throw InvalidArgument("numeric scalar JSON: expected a decimal string");
}

}  // namespace

Json scalar_to_json(const CycloScalar& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return Json{{"M", c.order()}, {"coeffs", std::move(coeffs)}};
}

Json scalar_to_json(const NumericScalar& c) { return Json{{"re", real_text(c.real())}, {"im", real_text(c.imag())}}; }

template <>
CycloScalar scalar_from_json<CycloScalar>(const Json& j) {
  const unsigned M = j.at("M").get<unsigned>();
  std::vector<Rational> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("scalar JSON: coefficient must be [num, den]");
    auto part = [](const Json& x) { return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>()); };
    coeffs.push_back(parse_rational(part(pair[0]) + "/" + part(pair[1])));
  }
  return CycloScalar::from_powers(M, coeffs);
}

template <>
NumericScalar scalar_from_json<NumericScalar>(const Json& j) {
  if (j.contains("M")) return embed_numeric(scalar_from_json<CycloScalar>(j), numeric_settings().precision_bits);
  return NumericScalar(real_from(j.at("re")), real_from(j.at("im")));
}

}  // namespace cuntz
