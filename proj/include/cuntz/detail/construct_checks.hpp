#pragma once

// Implementation of the check batteries declared in construct.hpp.

#include <functional>
#include <sstream>

namespace cuntz {
namespace detail {

inline std::string coord_text(const Coordinate& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline Json coord_json(const Coordinate& c) { return Json{{"row", c.row}, {"col", c.col}}; }

/// Runs `ok(i)` for i in [0, count) and reports the first failing index.
inline Check check_each(std::string id, unsigned count, const std::string& what,
                        const std::function<bool(unsigned)>& ok) {
  for (unsigned i = 0; i < count; ++i)
    if (!ok(i)) return make_check(std::move(id), false, what + ": fails at index " + std::to_string(i), Json{{"index", i}});
  return make_check(std::move(id), true, what + " (" + std::to_string(count) + " cases)");
}

/// 0/1 matrix with ones where pred(h, k) holds; h, k are 1-based.
template <CoefficientField S>
OpMatrix<S> indicator(unsigned size, unsigned rank, const std::function<bool(unsigned, unsigned)>& pred) {
  OpMatrix<S> out(size, rank);
  for (unsigned h = 1; h <= size; ++h)
    for (unsigned k = 1; k <= size; ++k)
      if (pred(h, k)) out(h - 1, k - 1) = Element<S>::one(rank);
  return out;
}

inline bool congruent(std::int64_t a, std::int64_t b, unsigned n) {
  const std::int64_t m = n;
  return (((a - b) % m) + m) % m == 0;
}

/// A random matrix of the given size over O_rank with some entries left zero.
template <CoefficientField S>
OpMatrix<S> random_matrix(Sampler& rng, unsigned size, unsigned rank, const SampleShape& shape) {
  OpMatrix<S> out(size, rank);
  for (unsigned i = 0; i < size; ++i)
    for (unsigned j = 0; j < size; ++j)
      if (rng.below(3) != 0) out(i, j) = realize<S>(random_element_spec(rng, rank, shape), rank);
  return out;
}

template <CoefficientField S>
std::vector<Element<S>> random_row(Sampler& rng, unsigned n, const SampleShape& shape) {
  std::vector<Element<S>> row;
  for (unsigned i = 0; i < n; ++i) row.push_back(realize<S>(random_element_spec(rng, n, shape), n));
  return row;
}

}  // namespace detail

template <CoefficientField S>
std::vector<Check> matrix_model_checks(const CyclicModel<S>& model) {
  using Elem = Element<S>;
  using Mat = OpMatrix<S>;
  using detail::check_each;
  using detail::congruent;
  const unsigned n = model.n();
  std::vector<Check> out;

  // (T_l)_{h,k} = n^{-1/2} S_k zeta_n^{l(h-k)}
  {
    std::optional<std::string> failure;
    for (unsigned l = 1; l <= n && !failure; ++l)
      for (unsigned h = 1; h <= n && !failure; ++h)
        for (unsigned k = 1; k <= n && !failure; ++k) {
          const Elem expected =
              Elem::generator(n, k) * (inverse_sqrt<S>(n) * S::root_of_unity(n, static_cast<std::int64_t>(l) *
                                                                                     (static_cast<std::int64_t>(h) - k)));
          if (!model.T[l - 1](h - 1, k - 1).equals(expected))
            failure = "l=" + std::to_string(l) + " entry (" + std::to_string(h) + "," + std::to_string(k) + ")";
        }
    out.push_back(make_check("T_entry_formula", !failure,
                             failure ? "entry formula fails at " + *failure
                                     : "entry formula holds for all " + std::to_string(n * n * n) + " (l,h,k)"));
  }

  // n^{-1/2} Z^{l-1} V Z^{-l+1} is T_{l-1} in the entry-formula labeling
  out.push_back(check_each("T_definition_relabeled", n, "n^{-1/2} Z^{l-1} V Z^{-(l-1)} = T_{l-1}", [&](unsigned i) {
    const Mat lit = inverse_sqrt<S>(n) * (model.Z.pow(i) * model.Vmat * model.Z.adjoint().pow(i));
    return lit.equals(model.T_at(static_cast<std::int64_t>(i)));
  }));

  out.push_back(check_each("T_isometries", n, "T_l^* T_l = I",
                           [&](unsigned i) { return model.T[i].is(MatrixKind::isometry); }));

  {
    Mat sum(n, n);
    for (unsigned l = 0; l < n; ++l) sum += model.T[l] * model.T_adj[l];
    const auto verdict = sum.compare(Mat::identity(n, n));
    out.push_back(make_check("T_sum_TTstar_identity", verdict.ok,
                             verdict.ok ? "sum_l T_l T_l^* = I"
                                        : "sum_l T_l T_l^* differs from I at " + detail::coord_text(*verdict.first_failure)));
  }

  out.push_back(check_each("T_cyclic_compatible", n, "T_l is lambda_C-compatible",
                           [&](unsigned i) { return model.check_cyclic_compatible(model.T[i]).ok; }));

  out.push_back(check_each("ad_Z_shifts_T", n, "Ad(Z)(T_l) = T_{l+1}", [&](unsigned i) {
    return model.ad_Z(model.T[i]).equals(model.T_at(static_cast<std::int64_t>(i) + 2));
  }));

  {
    const Mat delta = detail::indicator<S>(n, n, [&](unsigned p, unsigned q) { return congruent(p + 1, q, n); });
    const Mat av = model.alpha(model.v);
    out.push_back(make_check("alpha_v_equals_w", av.equals(delta) && model.w.equals(delta),
                             "alpha(v) = w = (delta_{p-q+1,0})"));
  }
  out.push_back(make_check("w_unitary", model.w.is(MatrixKind::unitary), "w is unitary"));

  out.push_back(check_each("w_power_formula", n, "(w^j)_{h,k} = delta_{k-h,-j}, j = 1..n", [&](unsigned i) {
    const unsigned j = i + 1;
    const Mat expected = detail::indicator<S>(
        n, n, [&](unsigned h, unsigned k) { return congruent(static_cast<std::int64_t>(k) - h, -static_cast<std::int64_t>(j), n); });
    return model.w.pow(j).equals(expected);
  }));
  out.push_back(check_each("w_power_formula_forward", n, "(w^j)_{h,k} = delta_{k-h,j}, j = 1..n", [&](unsigned i) {
    const unsigned j = i + 1;
    const Mat expected = detail::indicator<S>(
        n, n, [&](unsigned h, unsigned k) { return congruent(static_cast<std::int64_t>(k) - h, j, n); });
    return model.w.pow(j).equals(expected);
  }));

  out.push_back(make_check("alpha_bigT_equals_s1", model.alpha(model.bigT).equals(model.s[0]), "alpha(T) = s_1"));

  out.push_back(check_each("s_isometries", n, "s_l^* s_l = I",
                           [&](unsigned i) { return model.s[i].is(MatrixKind::isometry); }));

  const Mat w_adj = model.w.adjoint();
  out.push_back(check_each("w_s_wstar_shift", n, "w s_l w^* = s_{l-1} (s_0 = s_n)", [&](unsigned i) {
    return (model.w * model.s[i] * w_adj).equals(model.s_at(static_cast<std::int64_t>(i)));
  }));
  out.push_back(check_each("w_s_wstar_shift_forward", n, "w s_l w^* = s_{l+1}", [&](unsigned i) {
    return (model.w * model.s[i] * w_adj).equals(model.s_at(static_cast<std::int64_t>(i) + 2));
  }));

  auto entry_law = [&](int sign) {
    return [&model, n, sign](unsigned idx) {
      const unsigned j = idx / n + 1;
      const unsigned l = idx % n + 1;
      const Mat prod = model.w.pow(j) * model.s[l - 1];
      Mat expected(n, n);
      for (unsigned h = 1; h <= n; ++h)
        for (unsigned k = 1; k <= n; ++k)
          if (congruent(static_cast<std::int64_t>(k) - h, sign * static_cast<std::int64_t>(j), n))
            expected(h - 1, k - 1) = Elem::generator(n, wrap_index(k + l - 1, n));
      return prod.equals(expected);
    };
  };
  out.push_back(check_each("w_power_s_entry_law", n * n, "(w^j s_l)_{h,k} = S_{k+l-1} delta_{k-h,-j}", entry_law(-1)));
  out.push_back(
      check_each("w_power_s_entry_law_forward", n * n, "(w^j s_l)_{h,k} = S_{k+l-1} delta_{k-h,j}", entry_law(1)));

  out.push_back(check_each("reconstruct_T_from_first_row", n, "sum_l D_{l+1} w^l rebuilds T_l from its first row",
                           [&](unsigned i) { return model.reconstruct_from_first_row(model.T[i].row(0)).equals(model.T[i]); }));
  return out;
}

template <CoefficientField S>
std::vector<Check> membership_checks(const CyclicModel<S>& model, const SuiteOptions& options) {
  using Mat = OpMatrix<S>;
  const unsigned n = model.n();
  const SampleShape shape{2, 2, n};
  std::vector<Check> out;

  {
    Sampler rng(options.seed);
    unsigned compatible = 0;
    unsigned row_match = 0;
    for (unsigned t = 0; t < options.samples; ++t) {
      const auto row = detail::random_row<S>(rng, n, shape);
      const Mat A = model.reconstruct_from_first_row(row);
      if (model.check_cyclic_compatible(A).ok) ++compatible;
      bool match = true;
      for (unsigned k = 0; k < n; ++k) match = match && A(0, k).equals(row[k]);
      if (match) ++row_match;
    }
    const std::string tally = std::to_string(options.samples) + " seeded rows";
    out.push_back(make_check("reconstruction_compatible", compatible == options.samples,
                             std::to_string(compatible) + "/" + tally + " reconstruct to compatible matrices"));
    out.push_back(make_check("reconstruction_first_row", row_match == options.samples,
                             std::to_string(row_match) + "/" + tally + " reproduce their first row"));
  }

  {
    Sampler rng(options.seed ^ 0x5EED);
    unsigned correct = 0;
    std::optional<Json> first_bad;
    for (unsigned t = 0; t < options.samples; ++t) {
      Mat A = model.reconstruct_from_first_row(detail::random_row<S>(rng, n, shape));
      const auto p = static_cast<unsigned>(rng.below(n));
      const auto q = static_cast<unsigned>(rng.below(n));
      A(p, q) += realize<S>(random_monomial_spec(rng, n, shape), n);
      // the perturbed entry breaks the check at (p,q) and at its predecessor
      const Coordinate own{p + 1, q + 1};
      const Coordinate pred{(p + n - 1) % n + 1, (q + n - 1) % n + 1};
      const Coordinate expected = std::min(own, pred);
      const auto verdict = model.check_cyclic_compatible(A);
      if (!verdict.ok && verdict.first_failure == expected) {
        ++correct;
      } else if (!first_bad) {
        first_bad = Json{{"sample", t}, {"expected", detail::coord_json(expected)},
                         {"reported", verdict.ok ? Json() : detail::coord_json(*verdict.first_failure)}};
      }
    }
    out.push_back(make_check("noncompatible_rejected", correct == options.samples,
                             std::to_string(correct) + "/" + std::to_string(options.samples) +
                                 " perturbed matrices rejected at the expected coordinate",
                             first_bad));
  }

  {
    Sampler rng(options.seed ^ 0xD1A6);
    unsigned fixed = 0;
    for (unsigned t = 0; t < options.samples; ++t) {
      const Mat D = model.cyclic_diagonal(realize<S>(random_element_spec(rng, n, shape), n));
      if (model.ad_Z(D).equals(D)) ++fixed;
    }
    out.push_back(make_check("adZ_fixes_cyclic_diagonals", fixed == options.samples,
                             std::to_string(fixed) + "/" + std::to_string(options.samples) +
                                 " diagonals diag(lambda_C^{h-1}(x)) fixed by Ad(Z)"));
  }
  out.push_back(make_check("adZ_moves_T1", !model.ad_Z(model.T[0]).equals(model.T[0]), "Ad(Z)(T_1) != T_1"));
  return out;
}

template <CoefficientField S>
std::vector<Check> generator_checks(const CyclicModel<S>& model, const std::vector<Element<S>>& R,
                                    const SuiteOptions& options) {
  using detail::check_each;
  const unsigned n = model.n();
  std::vector<Check> out;
  out.push_back(check_each("R_fixed_by_cyclic", n, "lambda_C(R_l) = R_l",
                           [&](unsigned l) { return model.cyclic.is_fixed(R[l]); }));
  out.push_back(make_check("R_cuntz_relations", is_cuntz_family(R), "R_i^* R_j = delta_ij, sum_l R_l R_l^* = 1"));
  out.push_back(check_each("alpha_R_equals_s_1_minus_l", n, "alpha(R_l) = s_{1-l+n}", [&](unsigned l) {
    return model.alpha(R[l]).equals(model.s_at(1 - static_cast<std::int64_t>(l) + n));
  }));
  out.push_back(check_each("alpha_R_equals_s_1_plus_l", n, "alpha(R_l) = s_{1+l}", [&](unsigned l) {
    return model.alpha(R[l]).equals(model.s_at(1 + static_cast<std::int64_t>(l)));
  }));

  Sampler rng(options.seed ^ 0xA1FA);
  const SampleShape shape{2, 2, n};
  unsigned ok = 0;
  for (unsigned t = 0; t < options.intertwining_samples; ++t) {
    const auto x = realize<S>(random_element_spec(rng, n, shape), n);
    if (model.alpha(model.cyclic.apply(x)).equals(model.ad_Z(model.alpha(x)))) ++ok;
  }
  out.push_back(make_check("intertwining_alpha_cyclic", ok == options.intertwining_samples,
                           std::to_string(ok) + "/" + std::to_string(options.intertwining_samples) +
                               " samples satisfy alpha(lambda_C(x)) = Ad(Z)(alpha(x))"));
  return out;
}

template <CoefficientField S>
std::vector<Check> exchange_checks(const ExchangeModel<S>& model, const SuiteOptions& options) {
  using Mat = OpMatrix<S>;
  using Elem = Element<S>;
  using detail::check_each;
  using detail::congruent;
  const unsigned n = model.n;
  const unsigned m = model.m;
  const auto& cyc = model.cyc;
  std::vector<Check> out;

  {
    Sampler rng(options.seed ^ 0xE8C4);
    const SampleShape shape{2, 2, m};
    unsigned squares = 0;
    unsigned laws = 0;
    for (unsigned t = 0; t < options.matrix_samples; ++t) {
      const Mat A = detail::random_matrix<S>(rng, m, m, shape);
      const Mat r = model.rho(A);
      if (model.rho(r).equals(A)) ++squares;
      bool law = true;
      for (unsigned h = 0; h < m && law; ++h)
        for (unsigned k = 0; k < m && law; ++k)
          law = r(h, k).equals((h + k) % 2 == 0 ? A(h, k) : -A(h, k));
      if (law) ++laws;
    }
    const std::string of = "/" + std::to_string(options.matrix_samples) + " seeded matrices";
    out.push_back(make_check("rho_squared_identity", squares == options.matrix_samples,
                             std::to_string(squares) + of + " satisfy rho(rho(A)) = A"));
    out.push_back(make_check("rho_entry_law", laws == options.matrix_samples,
                             std::to_string(laws) + of + " satisfy rho(A)_{h,k} = (-1)^{h-k} A_{h,k}"));
  }

  out.push_back(check_each("rho_shifts_T_by_n", m, "rho(T_k) = T_{k+n}", [&](unsigned i) {
    return model.rho(cyc.T[i]).equals(cyc.T_at(static_cast<std::int64_t>(i) + 1 + n));
  }));
  out.push_back(check_each("rho_implements_exchange", m, "rho(TT_k) = TT_{2n-k+1}",
                           [&](unsigned i) { return model.rho(model.TT[i]).equals(model.TT[m - 1 - i]); }));
  out.push_back(make_check("beta_tilde_v_equals_w", model.beta(model.tilde_v).equals(cyc.w), "beta(tilde v) = w"));
  out.push_back(make_check("beta_T_equals_s1", model.beta(cyc.bigT).equals(cyc.s[0]), "beta(T) = s_1"));

  const unsigned family = n * m;
  auto jl = [m](unsigned idx) { return std::pair<unsigned, unsigned>{idx / m, idx % m}; };
  out.push_back(check_each("s_tilde_equals_w2j_s_l_plus_1", family, "Ad(w^l)(w^{2j} s_1) = w^{2j} s_{l+1}", [&](unsigned idx) {
    const auto [j, l] = jl(idx);
    return model.s_tilde_unscaled[j][l].equals(cyc.w.pow(2 * j) * cyc.s_at(l + 1));
  }));

  auto entry_law = [&](int sign) {
    return [&, sign](unsigned idx) {
      const auto [j, l] = jl(idx);
      Mat expected(m, m);
      for (unsigned h = 1; h <= m; ++h)
        for (unsigned k = 1; k <= m; ++k)
          if (congruent(static_cast<std::int64_t>(k) - h, sign * 2 * static_cast<std::int64_t>(j), m))
            expected(h - 1, k - 1) = Elem::generator(m, wrap_index(k + l, m));
      return model.s_tilde_unscaled[j][l].equals(expected);
    };
  };
  out.push_back(check_each("s_tilde_entry_law", family, "(s~_l^j)_{h,k} = S_{k+l} delta_{k-h,-2j}", entry_law(-1)));
  out.push_back(check_each("s_tilde_entry_law_forward", family, "(s~_l^j)_{h,k} = S_{k+l} delta_{k-h,2j}", entry_law(1)));
  out.push_back(check_each("s_tilde_parity_compatible", family, "s~_l^j has even-diagonal support and is compatible",
                           [&](unsigned idx) {
                             const auto [j, l] = jl(idx);
                             return model.check_parity_compatible(model.s_tilde_unscaled[j][l]).ok;
                           }));
  out.push_back(check_each("beta_y_equals_s_tilde", family, "beta(y_l^j) = s~_l^j (unscaled)", [&](unsigned idx) {
    const auto [j, l] = jl(idx);
    return model.beta(model.y_unscaled[j][l]).equals(model.s_tilde_unscaled[j][l]);
  }));
  out.push_back(check_each("y_fixed_by_exchange", family, "lambda_E(y_l^j) = y_l^j, both normalizations",
                           [&](unsigned idx) {
                             const auto [j, l] = jl(idx);
                             return model.exchange.is_fixed(model.y_unscaled[j][l]) &&
                                    model.exchange.is_fixed(model.y_scaled[j][l]);
                           }));

  const bool check_unscaled = options.normalization != Normalization::scaled;
  const bool check_scaled = options.normalization != Normalization::unscaled;
  std::vector<bool> scaled_y;
  std::vector<bool> scaled_s;
  for (unsigned j = 0; j < n; ++j) {
    const std::string suffix = "_j" + std::to_string(j);
    if (check_unscaled) {
      out.push_back(make_check("s_tilde_cuntz_relations" + suffix, is_cuntz_family(model.s_tilde_unscaled[j]),
                               "unscaled {s~_l^j}_l satisfies the O_" + std::to_string(m) + " Cuntz relations"));
      out.push_back(make_check("y_cuntz_relations" + suffix, is_cuntz_family(model.y_unscaled[j]),
                               "unscaled {y_l^j}_l satisfies the O_" + std::to_string(m) + " Cuntz relations"));
    }
    if (check_scaled) {
      scaled_y.push_back(is_cuntz_family(model.y_scaled[j]));
      scaled_s.push_back(is_cuntz_family(model.s_tilde_scaled[j]));
    }
  }
  if (options.normalization == Normalization::scaled) {
    for (unsigned j = 0; j < n; ++j) {
      const std::string suffix = "_j" + std::to_string(j);
      out.push_back(make_check("s_tilde_cuntz_relations" + suffix, scaled_s[j],
                               "(2n)^{-1/2}-scaled {s~_l^j}_l against the Cuntz relations"));
      out.push_back(make_check("y_cuntz_relations" + suffix, scaled_y[j],
                               "(2n)^{-1/2}-scaled {y_l^j}_l against the Cuntz relations"));
    }
  } else if (options.normalization == Normalization::both) {
    const bool any_scaled = std::find(scaled_y.begin(), scaled_y.end(), true) != scaled_y.end() ||
                            std::find(scaled_s.begin(), scaled_s.end(), true) != scaled_s.end();
    const Elem yy = model.y_scaled[0][0].adjoint() * model.y_scaled[0][0];
    const bool norm_is_fraction = yy.equals(Elem::one(m) * S::from_rational(Rational(1, m)));
    std::string detail = "finding: (2n)^{-1/2}-scaled family ";
    detail += any_scaled ? "satisfies" : "violates";
    detail += " the Cuntz relations";
    if (norm_is_fraction) detail += " (y^* y = 1/" + std::to_string(m) + ")";
    detail += "; unscaled family is used for all other checks";
    out.push_back(make_check("normalization_report", true, detail,
                             Json{{"scaled_y", scaled_y}, {"scaled_s_tilde", scaled_s}}));
  }
  return out;
}

template <CoefficientField S>
std::vector<Check> nogo_checks(const NogoWitness<S>& wit) {
  using Elem = Element<S>;
  using Mat = OpMatrix<S>;
  const Elem s1 = Elem::generator(2, 1);
  const Elem s2 = Elem::generator(2, 2);
  const Mat I = Mat::identity(2, 2);
  std::vector<Check> out;
  out.push_back(make_check("F_selfadjoint_unitary",
                           wit.F.is(ElementKind::selfadjoint) && wit.F.is(ElementKind::unitary),
                           "F = S1S1^* - S2S2^* is a self-adjoint unitary"));
  out.push_back(make_check("F_acts_on_ranges", (wit.F * s1).equals(s1) && (wit.F * s2).equals(-s2),
                           "F S1 = S1 and F S2 = -S2"));
  out.push_back(make_check("V_unitary", wit.V.is(MatrixKind::unitary), "V = [[0,-F],[F,0]] is unitary"));
  out.push_back(make_check("V_T2_equals_T1", (wit.V * wit.T2).equals(wit.T1), "V T_2 = T_1"));
  out.push_back(make_check("ad_Z2_V_equals_V_adjoint", ad_unitary(wit.Z2, wit.V).equals(wit.V.adjoint()),
                           "Z V Z^* = V^*"));
  out.push_back(make_check("V_squared_is_minus_identity", (wit.V * wit.V + I).equals(Mat(2, 2)),
                           "V^2 + I = 0, so the spectrum of V is {i, -i}"));
  out.push_back(make_check("ad_Z2_swaps_T1_T2",
                           ad_unitary(wit.Z2, wit.T2).equals(wit.T1) && ad_unitary(wit.Z2, wit.T1).equals(wit.T2),
                           "Z T_2 Z^* = T_1 and Z T_1 Z^* = T_2"));
  out.push_back(make_check("candidate_violates_VT1_eq_T2V", !(wit.V * wit.T1).equals(wit.T2 * wit.V),
                           "the derived candidate does not satisfy V T_1 = T_2 V"));
  {
    const CyclicModel<S> model(2);
    const bool match = model.T[0].equals(wit.T2) && model.T[1].equals(wit.T1);
    out.push_back(make_check("cyclic_model_matches_witness", match,
                             "cyclic_model(2): its T_1 is the witness T_2 and its T_2 the witness T_1"));
  }

  const Elem zero = Elem::zero(2);
  const Elem one = Elem::one(2);
  const auto candidate = nogo_equations(NogoQuadruple<S>{zero, -wit.F, wit.F, zero});
  const auto control = nogo_equations(NogoQuadruple<S>{one, zero, zero, one});
  auto verdicts = [](const std::array<bool, 17>& v) {
    Json j = Json::array();
    for (bool b : v) j.push_back(b);
    return j;
  };
  auto listing = [](const std::array<bool, 17>& v) {
    std::string holds;
    for (unsigned i = 0; i < v.size(); ++i)
      if (v[i]) holds += (holds.empty() ? "" : ",") + std::to_string(i + 1);
    return "equations holding: {" + holds + "}";
  };
  out.push_back(make_check("equations_candidate", true, "(a,b,c,d) = (0,-F,F,0): " + listing(candidate),
                           verdicts(candidate)));
  out.push_back(make_check("equations_identity_control", true, "(a,b,c,d) = (1,0,0,1): " + listing(control),
                           verdicts(control)));
  out.push_back(make_check("candidate_equations_1_to_4", candidate[0] && candidate[1] && candidate[2] && candidate[3],
                           "(0,-F,F,0) satisfies (1)-(4)"));
  out.push_back(make_check("candidate_equations_9_to_12",
                           candidate[8] && candidate[9] && candidate[10] && candidate[11],
                           "(0,-F,F,0) satisfies (9)-(12)"));
  out.push_back(make_check("identity_control_eq1_holds_eq2_fails", control[0] && !control[1],
                           "V = I satisfies (1) and violates (2)"));
  return out;
}

}  // namespace cuntz
