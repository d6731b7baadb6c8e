#pragma once

// JSON forms of scalars, elements, matrices, endomorphisms and named bundles.
// Big integers are written as decimal strings.

#include <string>

#include "cuntz/construct.hpp"
#include "cuntz/numeric.hpp"
#include "cuntz/report.hpp"
#include "cuntz/scalar.hpp"

namespace cuntz {

Json scalar_to_json(const CycloScalar& c);
Json scalar_to_json(const NumericScalar& c);

template <CoefficientField S>
S scalar_from_json(const Json& j);

template <>
CycloScalar scalar_from_json<CycloScalar>(const Json& j);
template <>
NumericScalar scalar_from_json<NumericScalar>(const Json& j);

template <CoefficientField S>
Json to_json(const Element<S>& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.sorted_terms()) {
    Json t;
    t["alpha"] = Json::array();
    t["beta"] = Json::array();
    for (Letter l : m.alpha) t["alpha"].push_back(int(l));
    for (Letter l : m.beta) t["beta"].push_back(int(l));
    t["coeff"] = scalar_to_json(c);
    terms.push_back(std::move(t));
  }
  return Json{{"n", x.rank()}, {"terms", std::move(terms)}};
}

template <CoefficientField S>
Element<S> element_from_json(const Json& j) {
  const unsigned n = j.at("n").get<unsigned>();
  Element<S> out(n);
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (int l : t.at("alpha").get<std::vector<int>>()) {
      if (l < 1 || l > int(n)) throw InvalidArgument("element JSON: letter out of range");
      m.alpha.push_back(static_cast<Letter>(l));
    }
    for (int l : t.at("beta").get<std::vector<int>>()) {
      if (l < 1 || l > int(n)) throw InvalidArgument("element JSON: letter out of range");
      m.beta.push_back(static_cast<Letter>(l));
    }
    out += Element<S>::monomial(n, m, scalar_from_json<S>(t.at("coeff")));
  }
  return out;
}

template <CoefficientField S>
Json to_json(const OpMatrix<S>& A) {
  Json rows = Json::array();
  for (unsigned i = 0; i < A.size(); ++i) {
    Json row = Json::array();
    for (unsigned k = 0; k < A.size(); ++k) row.push_back(to_json(A(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"k", A.size()}, {"n", A.rank()}, {"entries", std::move(rows)}};
}

template <CoefficientField S>
OpMatrix<S> matrix_from_json(const Json& j) {
  const unsigned k = j.at("k").get<unsigned>();
  const unsigned n = j.at("n").get<unsigned>();
  const auto& rows = j.at("entries");
  if (rows.size() != k) throw DimensionMismatch("matrix JSON: expected " + std::to_string(k) + " rows");
  OpMatrix<S> out(k, n);
  for (unsigned i = 0; i < k; ++i) {
    if (rows[i].size() != k) throw DimensionMismatch("matrix JSON: row " + std::to_string(i + 1) + " has wrong length");
    for (unsigned c = 0; c < k; ++c) out.set(i, c, element_from_json<S>(rows[i][c]));
  }
  return out;
}

template <CoefficientField S>
Json to_json(const Endo<S>& e) {
  Json images = Json::array();
  for (const auto& img : e.images()) images.push_back(to_json(img));
  return Json{{"n", e.rank()}, {"images", std::move(images)}};
}

template <CoefficientField S>
Endo<S> endo_from_json(const Json& j) {
  const unsigned n = j.at("n").get<unsigned>();
  std::vector<Element<S>> images;
  for (const auto& img : j.at("images")) images.push_back(element_from_json<S>(img));
  return Endo<S>(n, std::move(images));
}

namespace detail {
template <typename T>
Json list_json(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& it : items) out.push_back(to_json(it));
  return out;
}
}  // namespace detail

template <CoefficientField S>
Json to_json(const CyclicModel<S>& m) {
  return Json{{"n", m.n()},
              {"v", to_json(m.v)},
              {"Z", to_json(m.Z)},
              {"V", to_json(m.Vmat)},
              {"T", detail::list_json(m.T)},
              {"w", to_json(m.w)},
              {"s", detail::list_json(m.s)},
              {"bigT", to_json(m.bigT)},
              {"R", detail::list_json(m.R)}};
}

template <CoefficientField S>
Json to_json(const ExchangeModel<S>& m) {
  Json y = Json::object(), st = Json::object();
  Json y_unscaled = Json::array(), y_scaled = Json::array(), s_unscaled = Json::array(), s_scaled = Json::array();
  for (std::size_t j = 0; j < m.y_unscaled.size(); ++j) {
    y_unscaled.push_back(detail::list_json(m.y_unscaled[j]));
    y_scaled.push_back(detail::list_json(m.y_scaled[j]));
    s_unscaled.push_back(detail::list_json(m.s_tilde_unscaled[j]));
    s_scaled.push_back(detail::list_json(m.s_tilde_scaled[j]));
  }
  y["unscaled"] = std::move(y_unscaled);
  y["scaled"] = std::move(y_scaled);
  st["unscaled"] = std::move(s_unscaled);
  st["scaled"] = std::move(s_scaled);
  return Json{{"n", m.n},
              {"Z", to_json(m.cyc.Z)},
              {"T", detail::list_json(m.TT)},
              {"w", to_json(m.cyc.w)},
              {"s", detail::list_json(m.cyc.s)},
              {"rho_unitary", to_json(m.rho_unitary)},
              {"tilde_v", to_json(m.tilde_v)},
              {"y", std::move(y)},
              {"s_tilde", std::move(st)}};
}

template <CoefficientField S>
Json to_json(const NogoWitness<S>& w) {
  return Json{{"F", to_json(w.F)}, {"V", to_json(w.V)}, {"Z2", to_json(w.Z2)}, {"T1", to_json(w.T1)},
              {"T2", to_json(w.T2)}};
}

}  // namespace cuntz
