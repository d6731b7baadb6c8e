#pragma once

// Named objects of the matrix model of the cyclic fixed-point algebra, its
// exchange-automorphism variant on O_{2n}, and the M_2(O_2) no-go witness.
//
// Orientation of w. The unitary w = alpha(v) has ones at (p, p+1); this is
// forced by alpha o lambda_C = Ad(Z) o alpha, since alpha(v) must be an
// eigenvector of Ad(Z) for the eigenvalue zeta^-1. With that w:
//   (w^j)_{h,k} = delta_{k-h, j},   w s_l w^* = s_{l+1},
//   alpha(Ad(v^l)(T)) = s_{1+l},    A = sum_l D_{l+1} w^l.
// The transposed statements (delta_{k-h,-j}, s_{l-1}, s_{1-l+n}) coincide
// with these only for n = 2; both forms are available as checks.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/matrix.hpp"
#include "cuntz/morphism.hpp"
#include "cuntz/random.hpp"
#include "cuntz/report.hpp"

namespace cuntz {

inline constexpr unsigned kMaxModelRank = 12;

template <CoefficientField S>
S inverse_sqrt(unsigned m) {
  return S::sqrt_int(m) * S::from_rational(Rational(1, m));
}

/// Substitutes gens[k-1] for S_k (and its adjoint for S_k^*) monomial-wise.
/// Word products are memoized by prefix, so each distinct alpha (and each
/// distinct beta) costs one matrix product beyond its parent.
template <CoefficientField S>
OpMatrix<S> represent(const Element<S>& x, const std::vector<OpMatrix<S>>& gens,
                      const std::vector<OpMatrix<S>>& gens_adj) {
  if (gens.size() != x.rank()) throw RankMismatch("represent: one generator matrix per S_k is required");
  const unsigned size = gens.front().size();
  const unsigned rank = gens.front().rank();
  std::map<Word, OpMatrix<S>> left, right;
  left.emplace(Word{}, OpMatrix<S>::identity(size, rank));
  right.emplace(Word{}, OpMatrix<S>::identity(size, rank));
  // left[w] = G_{w1}...G_{wm}; right[w] = G_{wm}^*...G_{w1}^* = (left[w])^*.
  std::function<const OpMatrix<S>&(const Word&)> product_left = [&](const Word& w) -> const OpMatrix<S>& {
    if (auto it = left.find(w); it != left.end()) return it->second;
    const Word parent(w.begin(), w.end() - 1);
    OpMatrix<S> m = product_left(parent) * gens[w.back() - 1];
    return left.emplace(w, std::move(m)).first->second;
  };
  std::function<const OpMatrix<S>&(const Word&)> product_right = [&](const Word& w) -> const OpMatrix<S>& {
    if (auto it = right.find(w); it != right.end()) return it->second;
    const Word parent(w.begin(), w.end() - 1);
    OpMatrix<S> m = gens_adj[w.back() - 1] * product_right(parent);
    return right.emplace(w, std::move(m)).first->second;
  };
  // Group terms by alpha so each alpha multiplies one combined right factor.
  std::map<Word, OpMatrix<S>> by_alpha;
  for (const auto& [m, c] : x.terms()) {
    auto [it, fresh] = by_alpha.try_emplace(m.alpha, size, rank);
    it->second += c * product_right(m.beta);
  }
  OpMatrix<S> out(size, rank);
  for (const auto& [alpha, tail] : by_alpha) out += product_left(alpha) * tail;
  return out;
}

template <CoefficientField S>
class CyclicModel {
 public:
  using Elem = Element<S>;
  using Mat = OpMatrix<S>;

  explicit CyclicModel(unsigned n)
      : n_(checked_rank(n)),
        v(spectral_unitary<S>(n)),
        Z(make_Z(n)),
        Vmat(make_V(n)),
        w(make_w(n)),
        bigT(make_bigT(n)),
        cyclic(named_endo<S>(EndoKind::cyclic, n)) {
    const Mat Zadj = Z.adjoint();
    Mat conj_left = Z;
    Mat conj_right = Zadj;
    for (unsigned l = 1; l <= n; ++l) {
      T.push_back(inverse_sqrt<S>(n) * (conj_left * Vmat * conj_right));
      conj_left = conj_left * Z;
      conj_right = conj_right * Zadj;
    }
    for (const auto& t : T) T_adj.push_back(t.adjoint());
    for (unsigned l = 1; l <= n; ++l) s.push_back(make_s(n, l));
    const Elem v_adj = v.adjoint();
    Elem vp = Elem::one(n);
    Elem vq = Elem::one(n);
    for (unsigned l = 0; l < n; ++l) {
      R.push_back(vp * bigT * vq);
      vp = vp * v;
      vq = vq * v_adj;
    }
  }

  unsigned n() const noexcept { return n_; }

  /// alpha: S_k -> T_k.
  Mat alpha(const Elem& x) const { return represent(x, T, T_adj); }

  Mat ad_Z(const Mat& A) const { return ad_unitary(Z, A); }

  /// s_l with the index wrapped into 1..n.
  const Mat& s_at(std::int64_t l) const { return s[wrap_index(l, n_) - 1]; }
  const Mat& T_at(std::int64_t l) const { return T[wrap_index(l, n_) - 1]; }

  /// diag(lambda_C^{h-1}(x)), h = 1..n.
  Mat cyclic_diagonal(const Elem& x) const {
    std::vector<Elem> diag{x};
    for (unsigned h = 1; h < n_; ++h) diag.push_back(cyclic.apply(diag.back()));
    return Mat::diagonal(diag);
  }

  /// Sum_{l=0}^{n-1} D_{l+1} w^l with D_l = diag(lambda_C^{h-1}(row[l-1])).
  Mat reconstruct_from_first_row(const std::vector<Elem>& row) const {
    if (row.size() != n_) throw DimensionMismatch("reconstruct_from_first_row: row length must equal n");
    Mat out(n_, n_);
    Mat wl = Mat::identity(n_, n_);
    for (unsigned l = 0; l < n_; ++l) {
      out += cyclic_diagonal(row[l]) * wl;
      wl = wl * w;
    }
    return out;
  }

  /// lambda_C(A_{h,k}) = A_{h+1,k+1} (indices mod n), scanned row-major; the
  /// failure coordinate is the (h,k) whose image does not match.
  MatrixVerdict check_cyclic_compatible(const Mat& A) const {
    if (A.size() != n_ || A.rank() != n_)
      throw DimensionMismatch("check_cyclic_compatible: matrix must have size and rank n");
    for (unsigned h = 0; h < n_; ++h)
      for (unsigned k = 0; k < n_; ++k)
        if (!cyclic.apply(A(h, k)).equals(A((h + 1) % n_, (k + 1) % n_))) return {false, Coordinate{h + 1, k + 1}};
    return {};
  }

 private:
  static unsigned checked_rank(unsigned n) {
    if (n < 2 || n > kMaxModelRank)
      throw InvalidArgument("cyclic model rank must lie in 2.." + std::to_string(kMaxModelRank));
    return n;
  }

  static Mat make_Z(unsigned n) {
    std::vector<Elem> diag;
    for (unsigned k = 1; k <= n; ++k) diag.push_back(Elem::scalar(n, S::root_of_unity(n, k - 1)));
    return Mat::diagonal(diag);
  }

  static Mat make_V(unsigned n) {
    Mat out(n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) out(i, j) = Elem::generator(n, j + 1);
    return out;
  }

  static Mat make_w(unsigned n) {
    Mat out(n, n);
    for (unsigned p = 0; p < n; ++p) out(p, (p + 1) % n) = Elem::one(n);
    return out;
  }

  static Mat make_s(unsigned n, unsigned l) {
    std::vector<Elem> diag;
    for (unsigned h = 1; h <= n; ++h) diag.push_back(Elem::generator(n, wrap_index(l + h - 1, n)));
    return Mat::diagonal(diag);
  }

  static Elem make_bigT(unsigned n) {
    Elem out(n);
    for (unsigned k = 1; k <= n; ++k) out += Elem::generator(n, k);
    return out * inverse_sqrt<S>(n);
  }

  unsigned n_;

 public:
  Elem v;
  Mat Z;
  Mat Vmat;
  std::vector<Mat> T;  // T[l-1] = T_l = n^{-1/2} Z^l V Z^{-l}
  std::vector<Mat> T_adj;
  Mat w;
  std::vector<Mat> s;  // s[l-1] = s_l
  Elem bigT;
  std::vector<Elem> R;  // R[l] = Ad(v^l)(bigT), l = 0..n-1
  Endo<S> cyclic;
};

enum class Normalization { scaled, unscaled, both };

template <CoefficientField S>
class ExchangeModel {
 public:
  using Elem = Element<S>;
  using Mat = OpMatrix<S>;

  /// Objects on O_{2n}; `half` is n.
  explicit ExchangeModel(unsigned half)
      : n(half),
        m(2 * half),
        cyc(2 * half),
        rho_unitary(cyc.Z.pow(half)),
        tilde_v(make_tilde_v(half)),
        exchange(named_endo<S>(EndoKind::exchange, 2 * half)) {
    if (half < 1) throw InvalidArgument("exchange model needs n >= 1");
    TT.resize(m, Mat(m, m));
    for (unsigned k = 1; k <= n; ++k) {
      TT[k - 1] = cyc.T[k - 1];
      TT[m - k] = cyc.T_at(k + n);
    }
    for (const auto& t : TT) TT_adj.push_back(t.adjoint());

    const S scale = inverse_sqrt<S>(m);
    const Elem tv_adj = tilde_v.adjoint();
    const Mat w_adj = cyc.w.adjoint();
    for (unsigned j = 0; j < n; ++j) {
      const Elem left = tilde_v.pow(2 * j) * cyc.bigT;
      const Mat left_m = cyc.w.pow(2 * j) * cyc.s[0];
      std::vector<Elem> yu;
      std::vector<Elem> ys;
      std::vector<Mat> su;
      std::vector<Mat> ss;
      Elem vp = Elem::one(m);
      Elem vq = Elem::one(m);
      Mat wp = Mat::identity(m, m);
      Mat wq = Mat::identity(m, m);
      for (unsigned l = 0; l < m; ++l) {
        yu.push_back(vp * left * vq);
        ys.push_back(yu.back() * scale);
        su.push_back(wp * left_m * wq);
        ss.push_back(scale * su.back());
        vp = vp * tilde_v;
        vq = vq * tv_adj;
        wp = wp * cyc.w;
        wq = wq * w_adj;
      }
      y_unscaled.push_back(std::move(yu));
      y_scaled.push_back(std::move(ys));
      s_tilde_unscaled.push_back(std::move(su));
      s_tilde_scaled.push_back(std::move(ss));
    }
  }

  /// rho = Ad(Z^n).
  Mat rho(const Mat& A) const { return ad_unitary(rho_unitary, A); }

  /// beta: S_k -> TT_k.
  Mat beta(const Elem& x) const { return represent(x, TT, TT_adj); }

  /// Zero entries on odd diagonals and lambda_C-compatible.
  MatrixVerdict check_parity_compatible(const Mat& A) const { return parity_compatible(cyc, A); }

  static MatrixVerdict parity_compatible(const CyclicModel<S>& cyc, const Mat& A) {
    if (A.size() % 2 != 0) throw DimensionMismatch("check_parity_compatible: matrix size must be even");
    for (unsigned h = 0; h < A.size(); ++h)
      for (unsigned k = 0; k < A.size(); ++k)
        if ((h + k) % 2 == 1 && !A(h, k).is_zero()) return {false, Coordinate{h + 1, k + 1}};
    return cyc.check_cyclic_compatible(A);
  }

 private:
  static Elem make_tilde_v(unsigned half) {
    const unsigned m = 2 * half;
    Elem out(m);
    for (unsigned k = 1; k <= half; ++k) {
      const auto a = static_cast<Letter>(k);
      const auto b = static_cast<Letter>(m - k + 1);
      out.add_term(Monomial{{a}, {a}}, S::root_of_unity(m, k));
      out.add_term(Monomial{{b}, {b}}, S::root_of_unity(m, k + half));
    }
    return out;
  }

 public:
  unsigned n;
  unsigned m;
  CyclicModel<S> cyc;  // rank 2n: Z, T, w, s, bigT
  Mat rho_unitary;     // Z^n
  std::vector<Mat> TT;
  std::vector<Mat> TT_adj;
  Elem tilde_v;
  // [j][l], j = 0..n-1, l = 0..2n-1
  std::vector<std::vector<Elem>> y_unscaled;
  std::vector<std::vector<Elem>> y_scaled;
  std::vector<std::vector<Mat>> s_tilde_unscaled;
  std::vector<std::vector<Mat>> s_tilde_scaled;
  Endo<S> exchange;
};

template <CoefficientField S>
struct NogoWitness {
  Element<S> F;
  OpMatrix<S> V;
  OpMatrix<S> Z2;
  OpMatrix<S> T1;
  OpMatrix<S> T2;
};

template <CoefficientField S>
NogoWitness<S> nogo_witness() {
  using Elem = Element<S>;
  using Mat = OpMatrix<S>;
  const Elem s1 = Elem::generator(2, 1);
  const Elem s2 = Elem::generator(2, 2);
  const Elem F = s1 * s1.adjoint() - s2 * s2.adjoint();
  const Elem zero = Elem::zero(2);
  const Elem one = Elem::one(2);
  const S r = inverse_sqrt<S>(2);
  return NogoWitness<S>{
      F,
      Mat::from_rows({{zero, -F}, {F, zero}}),
      Mat::from_rows({{one, zero}, {zero, -one}}),
      r * Mat::from_rows({{s1, s2}, {s1, s2}}),
      r * Mat::from_rows({{s1, -s2}, {-s1, s2}}),
  };
}

template <CoefficientField S>
struct NogoQuadruple {
  Element<S> a;
  Element<S> b;
  Element<S> c;
  Element<S> d;
};

/// Verdicts of the seventeen no-go equations for V = [[a, b], [c, d]]:
/// (1)-(8) from V T_2 = T_1 and V T_1 = T_2 V, (9)-(12) from Z V Z^* = V^*,
/// (13) a + b = -c - d, (14)-(15) from V V^* = 1, and (16)-(17) which
/// substitute c = d + F into (14)-(15).
template <CoefficientField S>
std::array<bool, 17> nogo_equations(const NogoQuadruple<S>& q) {
  using Elem = Element<S>;
  for (const Elem* e : {&q.a, &q.b, &q.c, &q.d})
    if (e->rank() != 2) throw RankMismatch("nogo_equations: entries must lie in O_2");
  const auto& [a, b, c, d] = q;
  const Elem s1 = Elem::generator(2, 1);
  const Elem s2 = Elem::generator(2, 2);
  const Elem one = Elem::one(2);
  const Elem zero = Elem::zero(2);
  const Elem F = s1 * s1.adjoint() - s2 * s2.adjoint();
  const Elem dF = d + F;
  return {
      (a * s1 - b * s1).equals(s1),
      (-(a * s2) + b * s2).equals(s2),
      (c * s1 - d * s1).equals(s1),
      (-(c * s2) + d * s2).equals(s2),
      (a * s1 + b * s1).equals(s1 * a - s2 * c),
      (a * s2 + b * s2).equals(s1 * b - s2 * d),
      (c * s1 + d * s1).equals(-(s1 * a) + s2 * c),
      (c * s2 + d * s2).equals(-(s1 * b) + s2 * d),
      a.adjoint().equals(a),
      b.adjoint().equals(-c),
      c.adjoint().equals(-b),
      d.adjoint().equals(d),
      (a + b).equals(-c - d),
      (c * c + d * d).equals(one),
      (d * c + c * d).equals(zero),
      (dF * dF + d * d - one).equals(zero),
      (d * dF + dF * d).equals(zero),
  };
}

/// Cuntz relations x_i^* x_j = delta_ij, sum_i x_i x_i^* = 1 for a family
/// of elements of O_m.
template <CoefficientField S>
bool is_cuntz_family(const std::vector<Element<S>>& family) {
  if (family.empty()) return false;
  const unsigned rank = family.front().rank();
  std::vector<Element<S>> adj;
  for (const auto& x : family) adj.push_back(x.adjoint());
  Element<S> sum(rank);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      const Element<S> expected = i == j ? Element<S>::one(rank) : Element<S>::zero(rank);
      if (!(adj[i] * family[j]).equals(expected)) return false;
    }
    sum += family[i] * adj[i];
  }
  return sum.equals(Element<S>::one(rank));
}

template <CoefficientField S>
bool is_cuntz_family(const std::vector<OpMatrix<S>>& family) {
  if (family.empty()) return false;
  const unsigned size = family.front().size();
  const unsigned rank = family.front().rank();
  const auto id = OpMatrix<S>::identity(size, rank);
  const OpMatrix<S> zero(size, rank);
  std::vector<OpMatrix<S>> adj;
  for (const auto& x : family) adj.push_back(x.adjoint());
  OpMatrix<S> sum(size, rank);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j)
      if (!(adj[i] * family[j]).equals(i == j ? id : zero)) return false;
    sum += family[i] * adj[i];
  }
  return sum.equals(id);
}

// Check batteries. Each returns one Check per identity; suites assemble them.

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned samples = 50;
  unsigned intertwining_samples = 25;
  unsigned matrix_samples = 25;
  Normalization normalization = Normalization::both;
};

/// Matrix-model identities (entry formula, isometries, w, s_l, alpha).
template <CoefficientField S>
std::vector<Check> matrix_model_checks(const CyclicModel<S>& model);

/// Reconstruction of random first rows and rejection of perturbed matrices.
template <CoefficientField S>
std::vector<Check> membership_checks(const CyclicModel<S>& model, const SuiteOptions& options);

/// Fixed-point generators R_l; `R` may differ from model.R (negative controls).
template <CoefficientField S>
std::vector<Check> generator_checks(const CyclicModel<S>& model, const std::vector<Element<S>>& R,
                                    const SuiteOptions& options);

template <CoefficientField S>
std::vector<Check> exchange_checks(const ExchangeModel<S>& model, const SuiteOptions& options);

template <CoefficientField S>
std::vector<Check> nogo_checks(const NogoWitness<S>& witness);

}  // namespace cuntz

#include "cuntz/detail/construct_checks.hpp"
