// cuntz: verification driver and calculator for the O_n engine.
// Exit codes: 0 all checks pass / expressions equal, 1 a check failed /
// expressions differ, 2 usage, parse or evaluation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "cuntz/io.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/suites.hpp"

using namespace cuntz;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  unsigned n = 2;
  std::string backend = "exact";
  unsigned precision = 128;
  double tolerance = 1e-10;
  std::size_t max_terms = kDefaultExpansionLimit;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--n", c.n, "Cuntz rank (or matrix model size)")->capture_default_str();
  app->add_option("--backend", c.backend, "Coefficient backend")
      ->check(CLI::IsMember({"exact", "numeric"}))
      ->capture_default_str();
  app->add_option("--precision", c.precision, "Numeric backend precision in bits")
      ->check(CLI::Range(53u, 4096u))
      ->capture_default_str();
  app->add_option("--tolerance", c.tolerance, "Numeric backend zero tolerance")->capture_default_str();
  app->add_option("--max-terms", c.max_terms, "Expansion guard: largest allowed projected term count")
      ->capture_default_str();
}

void apply_common(const Common& c) {
  configure_numeric({c.precision, c.tolerance});
  set_expansion_limit(c.max_terms);
}

Backend backend_of(const Common& c) { return c.backend == "numeric" ? Backend::numeric : Backend::exact; }

template <CoefficientField S>
int eval_expr(const std::string& expr, unsigned n, bool json) {
  const auto x = parse_element<S>(expr, n);
  if (json) std::cout << to_json(x).dump(2) << "\n";
  else std::cout << format_element(x) << "\n";
  return kExitPass;
}

template <CoefficientField S>
int eq_expr(const std::string& a, const std::string& b, unsigned n, bool json) {
  const bool same = parse_element<S>(a, n).equals(parse_element<S>(b, n));
  if (json) std::cout << Json{{"n", n}, {"equal", same}}.dump() << "\n";
  else std::cout << (same ? "equal" : "not equal") << "\n";
  return same ? kExitPass : kExitFail;
}

template <CoefficientField S>
Json model_json(const std::string& name, unsigned n) {
  if (name == "cyclic") return to_json(CyclicModel<S>(n));
  if (name == "exchange") {
    if (n % 2 != 0) throw InvalidArgument("exchange model needs an even rank");
    return to_json(ExchangeModel<S>(n / 2));
  }
  if (n != 2) throw InvalidArgument("the nogo witness lives in M_2(O_2); n must be 2");
  return to_json(nogo_witness<S>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in Cuntz algebras and matrices over them"};
  app.require_subcommand(1);

  Common common;
  std::string suite;
  SuiteOptions options;
  std::string normalization = "both";
  bool json = false;
  bool no_timing = false;
  std::string output;

  auto add_suite_options = [&](CLI::App* sub) {
    add_common(sub, common);
    sub->add_option("--suite", suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));
    sub->add_option("--seed", options.seed, "Seed for randomized checks")->capture_default_str();
    sub->add_option("--samples", options.samples, "Random samples per property check")->capture_default_str();
    sub->add_option("--normalization", normalization, "Exchange family normalization to test")
        ->check(CLI::IsMember({"scaled", "unscaled", "both"}))
        ->capture_default_str();
    sub->add_flag("--no-timing", no_timing, "Omit elapsed time (byte-stable output)");
    sub->add_option("--output,-o", output, "Also write the report to this file");
  };

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_suite_options(verify);
  verify->add_flag("--json", json, "Emit the report as JSON");

  auto* report = app.add_subcommand("report", "Run a suite and emit its JSON report");
  add_suite_options(report);
  report->add_flag("--json", json, "Accepted for symmetry; report output is always JSON");

  std::string expr, other;
  auto* eval = app.add_subcommand("eval", "Parse, simplify and print an expression");
  add_common(eval, common);
  eval->add_option("expr", expr, "Expression")->required();
  eval->add_flag("--json", json, "Emit the element as JSON");

  auto* eq = app.add_subcommand("eq", "Decide equality of two expressions");
  add_common(eq, common);
  eq->add_option("lhs", expr, "Left expression")->required();
  eq->add_option("rhs", other, "Right expression")->required();
  eq->add_flag("--json", json, "Emit the verdict as JSON");

  std::string model_name;
  auto* model = app.add_subcommand("model", "Emit a named construction as JSON");
  add_common(model, common);
  model->add_option("name", model_name, "cyclic, exchange or nogo")
      ->required()
      ->check(CLI::IsMember({"cyclic", "exchange", "nogo"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    apply_common(common);
    const bool numeric = backend_of(common) == Backend::numeric;

    if (verify->parsed() || report->parsed()) {
      options.normalization = normalization == "scaled"     ? Normalization::scaled
                              : normalization == "unscaled" ? Normalization::unscaled
                                                            : Normalization::both;
      const CheckReport r = run_suite(suite, common.n, backend_of(common), options);
      const std::string text =
          (report->parsed() || json) ? r.to_json(!no_timing).dump(2) + "\n" : r.to_text();
      std::cout << text;
      if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw InvalidArgument("cannot write " + output);
        out << text;
      }
      return r.passed() ? kExitPass : kExitFail;
    }
    if (eval->parsed())
      return numeric ? eval_expr<NumericScalar>(expr, common.n, json) : eval_expr<CycloScalar>(expr, common.n, json);
    if (eq->parsed())
      return numeric ? eq_expr<NumericScalar>(expr, other, common.n, json)
                     : eq_expr<CycloScalar>(expr, other, common.n, json);
    if (model->parsed()) {
      const Json j = numeric ? model_json<NumericScalar>(model_name, common.n)
                             : model_json<CycloScalar>(model_name, common.n);
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
