// Acceptance run: one PASS/FAIL line per criterion. Exact backend with zero
// tolerance; numeric backend at 128 bits with tolerance 1e-10.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cuntz/numeric.hpp"
#include "cuntz/suites.hpp"

using namespace cuntz;
using Clock = std::chrono::steady_clock;

namespace {

struct Timed {
  std::vector<Check> checks;
  double seconds = 0;
};

template <typename F>
Timed timed(F&& f) {
  const auto t0 = Clock::now();
  Timed out;
  out.checks = f();
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

const Check* find(const std::vector<Check>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Verdicts of every check of every battery, keyed "battery/n/id".
using Verdicts = std::map<std::string, Status>;

struct Criterion {
  int number;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      notes.push_back(why);
    }
  }
  void print() const {
    std::printf("%s  criterion %d  %s", ok ? "PASS" : "FAIL", number, title.c_str());
    if (!notes.empty()) {
      std::printf("  --");
      std::size_t shown = 0;
      for (const auto& n : notes) {
        if (shown++ == 6) {
          std::printf(" ... (+%zu more)", notes.size() - 6);
          break;
        }
        std::printf(" %s;", n.c_str());
      }
    }
    std::printf("\n");
    std::fflush(stdout);
  }
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

void require_ids(Criterion& c, const std::vector<Check>& checks, const std::vector<std::string>& ids,
                 const std::string& where) {
  for (const auto& id : ids) {
    const Check* k = find(checks, id);
    if (!k) c.require(false, where + " missing " + id);
    else c.require(k->status == Status::pass, where + " " + id + " failed");
  }
}

template <CoefficientField S>
struct Batteries {
  std::map<unsigned, Timed> spectral, matrix_model, membership, generators, exchange, algebra;
  Timed nogo;
  double total = 0;

  void run(const SuiteOptions& opt) {
    const auto t0 = Clock::now();
    for (unsigned n = 2; n <= 6; ++n) {
      spectral[n] = timed([&] { return spectral_checks<S>(n, opt); });
      const CyclicModel<S> model(n);
      matrix_model[n] = timed([&] { return matrix_model_checks(model); });
      membership[n] = timed([&] { return membership_checks(model, opt); });
      if (n <= 5) generators[n] = timed([&] { return generator_checks(model, model.R, opt); });
    }
    for (unsigned half = 1; half <= 3; ++half)
      exchange[2 * half] = timed([&] { return exchange_checks(ExchangeModel<S>(half), opt); });
    nogo = timed([&] { return nogo_checks(nogo_witness<S>()); });
    for (unsigned n = 2; n <= 4; ++n) algebra[n] = timed([&] { return algebra_law_checks<S>(n, opt); });
    total = std::chrono::duration<double>(Clock::now() - t0).count();
  }

  // suites 1-6 only
  Verdicts verdicts() const {
    Verdicts v;
    auto add = [&](const std::string& tag, const std::map<unsigned, Timed>& m) {
      for (const auto& [n, t] : m)
        for (const auto& c : t.checks) v[tag + "/" + std::to_string(n) + "/" + c.id] = c.status;
    };
    add("spectral", spectral);
    add("matrix_model", matrix_model);
    add("membership", membership);
    add("generators", generators);
    add("exchange", exchange);
    for (const auto& c : nogo.checks) v["nogo/2/" + c.id] = c.status;
    return v;
  }

  double time_1_to_6() const {
    double s = nogo.seconds;
    for (const auto* m : {&spectral, &matrix_model, &membership, &generators, &exchange})
      for (const auto& [n, t] : *m) s += t.seconds;
    return s;
  }
};

}  // namespace

int main() {
  configure_numeric({128, 1e-10});
  const SuiteOptions opt;  // seed 0xC0FFEE, 50 samples, 25 intertwining/matrix samples

  Batteries<CycloScalar> exact;
  exact.run(opt);
  Batteries<NumericScalar> numeric;
  numeric.run(opt);

  std::vector<Criterion> all;

  {
    Criterion c{1, "spectral suite n=2..6 (v eigenvector, unitary, F laws, spectral sum; 50 samples)"};
    double worst = 0;
    for (const auto& [n, t] : exact.spectral) {
      const std::string where = "n=" + std::to_string(n);
      require_ids(c, t.checks,
                  {"v_eigenvector", "v_unitary", "expectation_idempotent", "expectation_unital",
                   "expectation_invariant", "components_sum_to_x"},
                  where);
      c.require(t.seconds < 5.0, where + " took " + fmt_seconds(t.seconds) + " (budget 5 s)");
      worst = std::max(worst, t.seconds);
    }
    c.title += " [max " + fmt_seconds(worst) + "/n]";
    all.push_back(c);
  }

  {
    Criterion c{2, "matrix-model suite n=2..6 (entry formula, T isometries, sum TT*=I, w, w^j, alpha(T)=s_1, ws_lw*=s_{l-1})"};
    double worst = 0;
    for (const auto& [n, t] : exact.matrix_model) {
      const std::string where = "n=" + std::to_string(n);
      require_ids(c, t.checks,
                  {"T_entry_formula", "T_isometries", "T_sum_TTstar_identity", "alpha_v_equals_w",
                   "w_power_formula", "alpha_bigT_equals_s1", "w_s_wstar_shift"},
                  where);
      c.require(t.seconds < 10.0, where + " took " + fmt_seconds(t.seconds) + " (budget 10 s)");
      worst = std::max(worst, t.seconds);
    }
    c.title += " [max " + fmt_seconds(worst) + "/n]";
    all.push_back(c);
  }

  {
    Criterion c{3, "membership/reconstruction n=2..6 (50 seeded rows reconstruct; 50 perturbed matrices rejected at the right coordinate)"};
    double total = 0;
    for (const auto& [n, t] : exact.membership) {
      require_ids(c, t.checks, {"reconstruction_compatible", "reconstruction_first_row", "noncompatible_rejected"},
                  "n=" + std::to_string(n));
      total += t.seconds;
    }
    c.require(total < 10.0, "took " + fmt_seconds(total) + " (budget 10 s)");
    c.title += " [" + fmt_seconds(total) + "]";
    all.push_back(c);
  }

  {
    Criterion c{4, "fixed-point generators n=2..5 (R_l fixed, Cuntz relations, alpha(R_l)=s_{1-l+n}, intertwining on 25 samples)"};
    double worst = 0;
    for (const auto& [n, t] : exact.generators) {
      const std::string where = "n=" + std::to_string(n);
      require_ids(c, t.checks,
                  {"R_fixed_by_cyclic", "R_cuntz_relations", "alpha_R_equals_s_1_minus_l", "intertwining_alpha_cyclic"},
                  where);
      c.require(t.seconds < 15.0, where + " took " + fmt_seconds(t.seconds) + " (budget 15 s)");
      worst = std::max(worst, t.seconds);
    }
    c.title += " [max " + fmt_seconds(worst) + "/n]";
    all.push_back(c);
  }

  {
    Criterion c{5, "exchange suite ranks 2,4,6 (rho^2=id, rho entry law, beta(v~)=w, s~=w^{2j}s_{l+1}, unscaled Cuntz, y fixed, normalization finding)"};
    double worst = 0;
    for (const auto& [m, t] : exact.exchange) {
      const std::string where = "rank " + std::to_string(m);
      require_ids(c, t.checks,
                  {"rho_squared_identity", "rho_entry_law", "beta_tilde_v_equals_w", "s_tilde_equals_w2j_s_l_plus_1",
                   "y_fixed_by_exchange", "normalization_report"},
                  where);
      for (unsigned j = 0; j < m / 2; ++j)
        require_ids(c, t.checks, {"s_tilde_cuntz_relations_j" + std::to_string(j)}, where);
      if (const Check* r = find(t.checks, "normalization_report"); r && r->witness) {
        bool scaled_ok = false;
        for (bool b : (*r->witness)["scaled_y"]) scaled_ok = scaled_ok || b;
        c.require(!scaled_ok, where + " scaled family unexpectedly satisfies the Cuntz relations");
      }
      c.require(t.seconds < 20.0, where + " took " + fmt_seconds(t.seconds) + " (budget 20 s)");
      worst = std::max(worst, t.seconds);
    }
    c.title += " [max " + fmt_seconds(worst) + "/rank; scaled variant recorded as failing]";
    all.push_back(c);
  }

  {
    Criterion c{6, "no-go suite n=2 (F, V unitary, VT_2=T_1, Ad(Z)(V)=V*, V^2+I=0, equation vectors)"};
    const auto& t = exact.nogo;
    require_ids(c, t.checks,
                {"F_selfadjoint_unitary", "V_unitary", "V_T2_equals_T1", "ad_Z2_V_equals_V_adjoint",
                 "V_squared_is_minus_identity", "equations_candidate", "equations_identity_control"},
                "nogo");
    for (const char* id : {"equations_candidate", "equations_identity_control"})
      if (const Check* k = find(t.checks, id)) c.require(k->witness.has_value(), std::string(id) + " has no verdict vector");
    c.require(t.seconds < 5.0, "took " + fmt_seconds(t.seconds) + " (budget 5 s)");
    c.title += " [" + fmt_seconds(t.seconds) + "]";
    all.push_back(c);
  }

  {
    Criterion c{7, "backend agreement on every verdict of suites 1-6 (numeric 128 bits, tol 1e-10)"};
    const auto a = exact.verdicts();
    const auto b = numeric.verdicts();
    std::size_t compared = 0;
    for (const auto& [key, status] : a) {
      auto it = b.find(key);
      if (it == b.end()) c.require(false, key + " missing on numeric");
      else {
        ++compared;
        c.require(it->second == status, key + " exact=" + to_string(status) + " numeric=" + to_string(it->second));
      }
    }
    const double te = exact.time_1_to_6(), tn = numeric.time_1_to_6();
    c.require(tn < 2 * te, "numeric took " + fmt_seconds(tn) + " vs exact " + fmt_seconds(te) + " (budget 2x)");
    c.title += " [" + std::to_string(compared) + " verdicts; exact " + fmt_seconds(te) + ", numeric " + fmt_seconds(tn) + "]";
    all.push_back(c);
  }

  {
    Criterion c{8, "algebra laws (associativity, adjoint, expansion, Cuntz-relation invariance), 200 instances per n=2..4"};
    double total = 0;
    for (const auto& [n, t] : exact.algebra) {
      require_ids(c, t.checks,
                  {"associativity", "adjoint_anti_multiplicative", "expansion_preserves_equality",
                   "cuntz_relation_invariance"},
                  "n=" + std::to_string(n));
      total += t.seconds;
    }
    c.require(total < 10.0, "took " + fmt_seconds(total) + " (budget 10 s)");
    c.title += " [" + fmt_seconds(total) + "]";
    all.push_back(c);
  }

  bool ok = true;
  for (const auto& c : all) {
    c.print();
    ok = ok && c.ok;
  }
  return ok ? 0 : 1;
}
