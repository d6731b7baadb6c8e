#include <gtest/gtest.h>

#include "cuntz/construct.hpp"
#include "oracles.hpp"

using namespace cuntz;
using E = Element<CycloScalar>;
using M = OpMatrix<CycloScalar>;

namespace {

E S(unsigned n, unsigned i) { return E::generator(n, i); }
CycloScalar zeta(unsigned m, long k) { return CycloScalar::root_of_unity(m, k); }

const Check* find(const std::vector<Check>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST(CyclicModel, EntryFormula) {
  for (unsigned n = 2; n <= 5; ++n) {
    const CyclicModel<CycloScalar> model(n);
    const CycloScalar r = CycloScalar::sqrt_int(n) * CycloScalar(Rational(1, n));
    EXPECT_TRUE(r * r * CycloScalar(long(n)) == CycloScalar(1));
    for (unsigned l = 1; l <= n; ++l)
      for (unsigned h = 1; h <= n; ++h)
        for (unsigned k = 1; k <= n; ++k) {
          const E expected = S(n, k) * (r * zeta(n, long(l) * (long(h) - long(k))));
          EXPECT_TRUE(model.T[l - 1](h - 1, k - 1).equals(expected)) << n << " " << l << " " << h << " " << k;
        }
  }
}

TEST(CyclicModel, TIsACuntzFamily) {
  for (unsigned n = 2; n <= 4; ++n) {
    const CyclicModel<CycloScalar> model(n);
    M sum(n, n);
    for (unsigned l = 0; l < n; ++l) {
      EXPECT_TRUE(model.T[l].is(MatrixKind::isometry));
      sum += model.T[l] * model.T[l].adjoint();
    }
    EXPECT_TRUE(sum.equals(M::identity(n, n)));
  }
}

TEST(CyclicModel, WOrientationForcedByIntertwining) {
  // alpha(v) must satisfy Ad(Z)(alpha(v)) = zeta^{-1} alpha(v)
  for (unsigned n = 2; n <= 4; ++n) {
    const CyclicModel<CycloScalar> model(n);
    const M w = model.alpha(model.v);
    EXPECT_TRUE(w.equals(model.w));
    M zw = w;
    zw *= zeta(n, -1);
    EXPECT_TRUE(model.ad_Z(w).equals(zw));
    for (unsigned p = 0; p < n; ++p)
      for (unsigned q = 0; q < n; ++q) {
        const bool one = q == (p + 1) % n;
        EXPECT_TRUE(one ? w(p, q).equals(E::one(n)) : w(p, q).is_zero()) << p << q;
      }
  }
}

TEST(CyclicModel, SmallCaseMatchesWitness) {
  const CyclicModel<CycloScalar> model(2);
  const auto w = nogo_witness<CycloScalar>();
  // the entry formula for n = 2 labels the witness T_2 as T_1
  EXPECT_TRUE(model.T[0].equals(w.T2));
  EXPECT_TRUE(model.T[1].equals(w.T1));
  EXPECT_TRUE(model.Z.equals(w.Z2));
}

TEST(Nogo, WitnessGenerators) {
  const auto w = nogo_witness<CycloScalar>();
  const CycloScalar r = CycloScalar::sqrt_int(2) * CycloScalar(Rational(1, 2));
  const M T1 = M::from_rows({{S(2, 1) * r, S(2, 2) * r}, {S(2, 1) * r, S(2, 2) * r}});
  const M T2 = M::from_rows({{S(2, 1) * r, -(S(2, 2) * r)}, {-(S(2, 1) * r), S(2, 2) * r}});
  EXPECT_TRUE(w.T1.equals(T1));
  EXPECT_TRUE(w.T2.equals(T2));
  EXPECT_TRUE(ad_unitary(w.Z2, w.T2).equals(w.T1));
  EXPECT_TRUE(ad_unitary(w.Z2, w.T1).equals(w.T2));
  EXPECT_TRUE(w.F.is(ElementKind::unitary));
  EXPECT_TRUE(w.F.is(ElementKind::selfadjoint));
  EXPECT_TRUE((w.V * w.T2).equals(w.T1));
  EXPECT_TRUE((w.V * w.V + M::identity(2, 2)).equals(M(2, 2)));
}

TEST(Nogo, EquationVerdicts) {
  const E F = S(2, 1) * S(2, 1).adjoint() - S(2, 2) * S(2, 2).adjoint();
  const auto cand = nogo_equations<CycloScalar>({E(2), -F, F, E(2)});
  for (int eq : {1, 2, 3, 4, 9, 10, 11, 12, 13, 16, 17}) EXPECT_TRUE(cand[eq - 1]) << eq;
  EXPECT_FALSE(cand[4]);
  const auto id = nogo_equations<CycloScalar>({E::one(2), E(2), E(2), E::one(2)});
  EXPECT_TRUE(id[0]);
  EXPECT_FALSE(id[1]);
}

TEST(CyclicModel, ReconstructionIsLeftInverseOfFirstRow) {
  Sampler rng(21);
  for (unsigned n = 2; n <= 4; ++n) {
    const CyclicModel<CycloScalar> model(n);
    for (int t = 0; t < 10; ++t) {
      std::vector<E> row;
      for (unsigned k = 0; k < n; ++k) row.push_back(realize<CycloScalar>(random_element_spec(rng, n, {2, 2, n}), n));
      const M A = model.reconstruct_from_first_row(row);
      EXPECT_TRUE(model.check_cyclic_compatible(A).ok);
      for (unsigned k = 0; k < n; ++k) EXPECT_TRUE(A(0, k).equals(row[k]));
      // lambda_C-compatibility entrywise: A_{h+1,k+1} = lambda_C(A_{h,k})
      const auto c = named_endo<CycloScalar>(EndoKind::cyclic, n);
      for (unsigned h = 0; h < n; ++h)
        for (unsigned k = 0; k < n; ++k) EXPECT_TRUE(A((h + 1) % n, (k + 1) % n).equals(c.apply(A(h, k))));
    }
  }
}

TEST(CyclicModel, RejectsPerturbedMatrix) {
  const unsigned n = 3;
  const CyclicModel<CycloScalar> model(n);
  M A = model.T[0];
  A.set(1, 2, A(1, 2) + S(n, 1));
  const auto v = model.check_cyclic_compatible(A);
  ASSERT_FALSE(v.ok);
  ASSERT_TRUE(v.first_failure.has_value());
  EXPECT_EQ(*v.first_failure, (Coordinate{1, 2}));
}

TEST(CyclicModel, ProductsOfTAreCompatible) {
  const unsigned n = 3;
  const CyclicModel<CycloScalar> model(n);
  const M P = model.T[0] * model.T[2].adjoint() * model.T[1];
  EXPECT_TRUE(model.check_cyclic_compatible(P).ok);
  EXPECT_TRUE(model.check_cyclic_compatible(model.w).ok);
  EXPECT_FALSE(model.check_cyclic_compatible(model.Z).ok);
}

TEST(Generators, NegativeControlReplacingR0) {
  const unsigned n = 3;
  const CyclicModel<CycloScalar> model(n);
  auto R = model.R;
  R[0] = S(n, 1);
  const auto checks = generator_checks(model, R, SuiteOptions{});
  const Check* fixed = find(checks, "R_fixed_by_cyclic");
  ASSERT_NE(fixed, nullptr);
  EXPECT_EQ(fixed->status, Status::fail);
  const auto good = generator_checks(model, model.R, SuiteOptions{});
  EXPECT_EQ(find(good, "R_fixed_by_cyclic")->status, Status::pass);
  EXPECT_EQ(find(good, "R_cuntz_relations")->status, Status::pass);
  EXPECT_EQ(find(good, "alpha_R_equals_s_1_plus_l")->status, Status::pass);
}

TEST(Exchange, ParityLaw) {
  Sampler rng(33);
  for (unsigned half : {1u, 2u}) {
    const ExchangeModel<CycloScalar> model(half);
    const unsigned m = 2 * half;
    int compatible = 0, not_compatible = 0;
    for (int t = 0; t < 12; ++t) {
      std::vector<E> row;
      for (unsigned k = 0; k < m; ++k) {
        const bool zero_odd = (k % 2 == 1) && (t % 2 == 0);
        row.push_back(zero_odd ? E(m) : realize<CycloScalar>(random_monomial_spec(rng, m, {1, 2, 1}), m));
      }
      const M A = model.cyc.reconstruct_from_first_row(row);
      const bool parity = model.check_parity_compatible(A).ok;
      EXPECT_EQ(model.rho(A).equals(A), parity);
      (parity ? compatible : not_compatible)++;
    }
    EXPECT_GT(compatible, 0);
    EXPECT_GT(not_compatible, 0);
  }
}

TEST(Exchange, RhoIsSignFlipOnOddDiagonals) {
  const ExchangeModel<CycloScalar> model(2);
  M A(4, 4);
  for (unsigned h = 0; h < 4; ++h)
    for (unsigned k = 0; k < 4; ++k) A.set(h, k, S(4, 1 + (h + k) % 4));
  const M B = model.rho(A);
  for (unsigned h = 0; h < 4; ++h)
    for (unsigned k = 0; k < 4; ++k)
      EXPECT_TRUE(B(h, k).equals((h + k) % 2 == 0 ? A(h, k) : -A(h, k)));
}

TEST(Exchange, NormalizationFinding) {
  const ExchangeModel<CycloScalar> model(2);
  EXPECT_TRUE(is_cuntz_family(model.y_unscaled[0]));
  EXPECT_FALSE(is_cuntz_family(model.y_scaled[0]));
  EXPECT_TRUE(is_cuntz_family(model.s_tilde_unscaled[1]));
}
