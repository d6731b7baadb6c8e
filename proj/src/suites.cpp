#include "cuntz/suites.hpp"

#include <algorithm>
#include <map>

#include "cuntz/numeric.hpp"

namespace cuntz {
namespace {

template <CoefficientField S>
std::string tally(unsigned ok, unsigned total, const std::string& what) {
  return std::to_string(ok) + "/" + std::to_string(total) + " " + what;
}

template <CoefficientField S>
std::vector<Check> run_typed(const std::string& suite, unsigned n, const SuiteOptions& options) {
  if (suite == "spectral") return spectral_checks<S>(n, options);
  if (suite == "algebra-laws") return algebra_law_checks<S>(n, options);
  if (suite == "cyclic-fixed") {
    const CyclicModel<S> model(n);
    auto out = matrix_model_checks(model);
    auto more = membership_checks(model, options);
    auto gens = generator_checks(model, model.R, options);
    out.insert(out.end(), more.begin(), more.end());
    out.insert(out.end(), gens.begin(), gens.end());
    return out;
  }
  if (suite == "exchange") return exchange_checks(ExchangeModel<S>(n / 2), options);
  if (suite == "nogo") return nogo_checks(nogo_witness<S>());
  throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "numeric"; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"spectral", "cyclic-fixed", "exchange", "nogo", "algebra-laws"};
  return names;
}

void validate_suite_request(const std::string& suite, unsigned n) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidArgument("unknown suite '" + suite + "'");
  const std::string bad = "invalid n=" + std::to_string(n) + " for suite " + suite;
  if (suite == "nogo") {
    if (n != 2) throw InvalidArgument(bad + " (nogo runs in M_2(O_2), n must be 2)");
  } else if (suite == "exchange") {
    if (n < 2 || n > 6 || n % 2 != 0) throw InvalidArgument(bad + " (exchange needs an even rank 2..6)");
  } else if (n < 2 || n > 6) {
    throw InvalidArgument(bad + " (expected 2..6)");
  }
}

CheckReport run_suite(const std::string& suite, unsigned n, Backend backend, const SuiteOptions& options) {
  validate_suite_request(suite, n);
  const auto start = std::chrono::steady_clock::now();
  CheckReport report{suite, n, to_string(backend), {}, {}};
  report.add_all(backend == Backend::exact ? run_typed<CycloScalar>(suite, n, options)
                                           : run_typed<NumericScalar>(suite, n, options));
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

template <CoefficientField S>
std::vector<Check> spectral_checks(unsigned n, const SuiteOptions& options) {
  using Elem = Element<S>;
  const auto cyclic = named_endo<S>(EndoKind::cyclic, n);
  const Elem v = spectral_unitary<S>(n);
  const Elem one = Elem::one(n);
  std::vector<Check> out;
  out.push_back(make_check("v_eigenvector", cyclic.apply(v).equals(v * S::root_of_unity(n, -1)),
                           "lambda_C(v) = zeta_n^{-1} v"));
  out.push_back(make_check("v_unitary", v.is(ElementKind::unitary), "v = sum_k zeta_n^k S_k S_k^* is unitary"));
  out.push_back(make_check("expectation_of_v_vanishes", expect_cyclic(v).is_zero(), "F(v) = 0"));
  out.push_back(make_check("expectation_unital", expect_cyclic(one).equals(one), "F(1) = 1"));

  Sampler rng(options.seed);
  const SampleShape shape{3, 2, n};
  const unsigned total = options.samples;
  unsigned idempotent = 0, invariant = 0, module = 0, sums = 0, eigen = 0;
  for (unsigned t = 0; t < total; ++t) {
    const Elem x = realize<S>(random_element_spec(rng, n, shape), n);
    const Elem a = expect_cyclic(realize<S>(random_element_spec(rng, n, shape), n));
    const Elem fx = expect_cyclic(x);
    if (expect_cyclic(fx).equals(fx)) ++idempotent;
    if (cyclic.apply(fx).equals(fx)) ++invariant;
    if (expect_cyclic(a * x).equals(a * fx)) ++module;
    const auto parts = spectral_decompose(x);
    Elem sum(n);
    bool eig = true;
    for (unsigned k = 0; k < n; ++k) {
      sum += parts[k];
      eig = eig && cyclic.apply(parts[k]).equals(parts[k] * S::root_of_unity(n, k));
    }
    if (sum.equals(x)) ++sums;
    if (eig) ++eigen;
  }
  out.push_back(make_check("expectation_idempotent", idempotent == total,
                           tally<S>(idempotent, total, "seeded samples satisfy F(F(x)) = F(x)")));
  out.push_back(make_check("expectation_invariant", invariant == total,
                           tally<S>(invariant, total, "seeded samples satisfy lambda_C(F(x)) = F(x)")));
  out.push_back(make_check("expectation_module_property", module == total,
                           tally<S>(module, total, "seeded samples satisfy F(a x) = a F(x) for fixed a")));
  out.push_back(make_check("components_sum_to_x", sums == total,
                           tally<S>(sums, total, "seeded samples satisfy x = sum_k F(x v^k) v^{-k}")));
  out.push_back(make_check("component_eigenvalues", eigen == total,
                           tally<S>(eigen, total, "seeded samples have lambda_C(c_k) = zeta_n^k c_k")));
  return out;
}

template <CoefficientField S>
std::vector<Check> algebra_law_checks(unsigned n, const SuiteOptions& options) {
  using Elem = Element<S>;
  Sampler rng(options.seed);
  const SampleShape shape{2, 3, n};
  const unsigned total = options.samples;
  Elem relation = Elem::one(n) * S::from_rational(-1);
  for (unsigned i = 1; i <= n; ++i) relation += Elem::generator(n, i) * Elem::generator(n, i).adjoint();

  unsigned assoc = 0, anti = 0, expand = 0, invariance = 0;
  for (unsigned t = 0; t < total; ++t) {
    const Elem x = realize<S>(random_element_spec(rng, n, shape), n);
    const Elem y = realize<S>(random_element_spec(rng, n, shape), n);
    const Elem z = realize<S>(random_element_spec(rng, n, shape), n);
    if (((x * y) * z).equals(x * (y * z))) ++assoc;
    if ((x * y).adjoint().equals(y.adjoint() * x.adjoint())) ++anti;
    std::size_t level = 0;
    for (const auto& [m, c] : x.terms()) level = std::max(level, m.beta.size());
    if (x.equals(x.expand_to_level(level + rng.below(3)))) ++expand;
    if (x.equals(x + relation * y) && x.equals(x + y * relation)) ++invariance;
  }
  std::vector<Check> out;
  out.push_back(make_check("associativity", assoc == total, tally<S>(assoc, total, "triples satisfy (xy)z = x(yz)")));
  out.push_back(make_check("adjoint_anti_multiplicative", anti == total,
                           tally<S>(anti, total, "pairs satisfy (xy)^* = y^* x^*")));
  out.push_back(make_check("expansion_preserves_equality", expand == total,
                           tally<S>(expand, total, "elements equal their level expansion")));
  out.push_back(make_check("cuntz_relation_invariance", invariance == total,
                           tally<S>(invariance, total, "elements unchanged by adding (sum S_iS_i^* - 1) y")));
  return out;
}

template std::vector<Check> spectral_checks<CycloScalar>(unsigned, const SuiteOptions&);
template std::vector<Check> spectral_checks<NumericScalar>(unsigned, const SuiteOptions&);
template std::vector<Check> algebra_law_checks<CycloScalar>(unsigned, const SuiteOptions&);
template std::vector<Check> algebra_law_checks<NumericScalar>(unsigned, const SuiteOptions&);

std::vector<std::string> verdict_differences(const CheckReport& a, const CheckReport& b) {
  std::map<std::string, std::pair<std::string, std::string>> table;
  for (const auto& c : a.checks) table[c.id].first = to_string(c.status);
  for (const auto& c : b.checks) table[c.id].second = to_string(c.status);
  std::vector<std::string> out;
  for (const auto& [id, pair] : table)
    if (pair.first != pair.second)
      out.push_back(id + ": " + a.backend + "=" + (pair.first.empty() ? "missing" : pair.first) + " " + b.backend +
                    "=" + (pair.second.empty() ? "missing" : pair.second));
  return out;
}

}  // namespace cuntz
