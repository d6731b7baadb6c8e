#pragma once

// Endomorphisms of O_n given by the images of the generators, and the Z_n
// action of the cyclic automorphism.

#include <string>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/matrix.hpp"

namespace cuntz {

enum class EndoKind { cyclic, exchange, flipflop };

enum class Validation { eager, deferred };

template <CoefficientField S>
class Endo {
 public:
  using Elem = Element<S>;

  /// images[i] is the image of S_{i+1}. With Validation::eager the images are
  /// checked against the Cuntz relations and InvalidEndo is thrown on failure.
  Endo(unsigned n, std::vector<Elem> images, Validation validation = Validation::eager)
      : rank_(n), images_(std::move(images)) {
    if (images_.size() != n)
      throw InvalidEndo("expected " + std::to_string(n) + " generator images, got " + std::to_string(images_.size()));
    for (const auto& img : images_)
      if (img.rank() != n) throw RankMismatch("generator image has the wrong rank");
    for (const auto& img : images_) adjoints_.push_back(img.adjoint());
    detect_permutation();
    if (validation == Validation::eager) validate();
  }

  static Endo identity(unsigned n) {
    std::vector<Elem> images;
    for (unsigned i = 1; i <= n; ++i) images.push_back(Elem::generator(n, i));
    return Endo(n, std::move(images));
  }

  /// lambda_u(S_i) = u S_i.
  static Endo from_unitary(const Elem& u) {
    if (!u.is(ElementKind::unitary)) throw NotUnitary("endo_from_unitary: input is not unitary");
    std::vector<Elem> images;
    for (unsigned i = 1; i <= u.rank(); ++i) images.push_back(u * Elem::generator(u.rank(), i));
    return Endo(u.rank(), std::move(images), Validation::deferred);
  }

  unsigned rank() const noexcept { return rank_; }
  const std::vector<Elem>& images() const noexcept { return images_; }

  /// u = sum_i lambda(S_i) S_i^*.
  Elem unitary() const {
    Elem u(rank_);
    for (unsigned i = 0; i < rank_; ++i) u += images_[i] * Elem::generator(rank_, i + 1).adjoint();
    return u;
  }

  Elem apply(const Elem& x) const {
    if (x.rank() != rank_) throw RankMismatch("endo_apply: rank mismatch");
    Elem out(rank_);
    if (!permutation_.empty()) {
      for (const auto& [m, c] : x.terms()) {
        Monomial r = m;
        for (auto& l : r.alpha) l = permutation_[l - 1];
        for (auto& l : r.beta) l = permutation_[l - 1];
        out.add_term(r, c);
      }
      return out;
    }
    for (const auto& [m, c] : x.terms()) {
      Elem term = Elem::scalar(rank_, c);
      for (Letter l : m.alpha) term = term * images_[l - 1];
      for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it) term = term * adjoints_[*it - 1];
      out += term;
    }
    return out;
  }

  /// (this o other)(x) = this(other(x)).
  Endo compose(const Endo& other) const {
    if (other.rank_ != rank_) throw RankMismatch("endo_compose: rank mismatch");
    std::vector<Elem> images;
    for (const auto& img : other.images_) images.push_back(apply(img));
    return Endo(rank_, std::move(images), Validation::deferred);
  }

  Endo power(unsigned k) const {
    Endo out = identity(rank_);
    for (unsigned i = 0; i < k; ++i) out = compose(out);
    return out;
  }

  bool equals(const Endo& other) const {
    if (other.rank_ != rank_) throw RankMismatch("endo_equals: rank mismatch");
    for (unsigned i = 0; i < rank_; ++i)
      if (!images_[i].equals(other.images_[i])) return false;
    return true;
  }

  bool is_fixed(const Elem& x) const { return apply(x).equals(x); }

  /// Cuntz relations of the images.
  bool satisfies_cuntz_relations() const {
    Elem sum(rank_);
    for (unsigned i = 0; i < rank_; ++i) {
      for (unsigned j = 0; j < rank_; ++j) {
        const Elem expected = i == j ? Elem::one(rank_) : Elem::zero(rank_);
        if (!(adjoints_[i] * images_[j]).equals(expected)) return false;
      }
      sum += images_[i] * adjoints_[i];
    }
    return sum.equals(Elem::one(rank_));
  }

 private:
  void validate() const {
    if (!satisfies_cuntz_relations()) throw InvalidEndo("generator images violate the Cuntz relations");
  }

  // Fast path for endomorphisms that permute the generators.
  void detect_permutation() {
    std::vector<Letter> perm;
    for (const auto& img : images_) {
      if (img.size() != 1) return;
      const auto& [m, c] = *img.terms().begin();
      if (m.alpha.size() != 1 || !m.beta.empty() || !(c - S::from_rational(1)).is_zero()) return;
      perm.push_back(m.alpha.front());
    }
    permutation_ = std::move(perm);
  }

  unsigned rank_;
  std::vector<Elem> images_;
  std::vector<Elem> adjoints_;
  std::vector<Letter> permutation_;
};

/// cyclic: S_i -> S_{i+1 mod n}; exchange: S_i -> S_{n-i+1}; flipflop: n = 2 only.
template <CoefficientField S>
Endo<S> named_endo(EndoKind kind, unsigned n) {
  using Elem = Element<S>;
  if (n < 2) throw InvalidArgument("named_endo: rank must be at least 2");
  if (kind == EndoKind::flipflop && n != 2) throw InvalidArgument("flip-flop is defined on O_2 only");
  std::vector<Elem> images;
  for (unsigned i = 1; i <= n; ++i) {
    const unsigned target = kind == EndoKind::exchange ? n - i + 1 : wrap_index(i + 1, n);
    images.push_back(Elem::generator(n, target));
  }
  return Endo<S>(n, std::move(images));
}

template <CoefficientField S>
OpMatrix<S> entrywise_endo(const Endo<S>& e, const OpMatrix<S>& A) {
  if (e.rank() != A.rank()) throw RankMismatch("entrywise_endo: rank mismatch");
  OpMatrix<S> out(A.size(), A.rank());
  for (unsigned i = 0; i < A.size(); ++i)
    for (unsigned j = 0; j < A.size(); ++j) out(i, j) = e.apply(A(i, j));
  return out;
}

/// v = sum_k zeta_n^k S_k S_k^*, the unitary eigenvector of lambda_C.
template <CoefficientField S>
Element<S> spectral_unitary(unsigned n) {
  Element<S> v(n);
  for (unsigned k = 1; k <= n; ++k)
    v.add_term(Monomial{{static_cast<Letter>(k)}, {static_cast<Letter>(k)}}, S::root_of_unity(n, k));
  return v;
}

/// F(x) = (1/n) sum_{k=1}^n lambda_C^{k-1}(x).
template <CoefficientField S>
Element<S> expect_cyclic(const Element<S>& x) {
  const unsigned n = x.rank();
  const auto cyclic = named_endo<S>(EndoKind::cyclic, n);
  Element<S> acc = x;
  Element<S> image = x;
  for (unsigned k = 1; k < n; ++k) {
    image = cyclic.apply(image);
    acc += image;
  }
  return acc * S::from_rational(Rational(1, n));
}

/// All n spectral components F(x v^k) v^{-k}, k = 0..n-1, with v^{-k} = (v^*)^k.
template <CoefficientField S>
std::vector<Element<S>> spectral_decompose(const Element<S>& x) {
  const unsigned n = x.rank();
  const Element<S> v = spectral_unitary<S>(n);
  const Element<S> v_adj = v.adjoint();
  std::vector<Element<S>> out;
  Element<S> v_pow = Element<S>::one(n);
  Element<S> v_inv_pow = Element<S>::one(n);
  for (unsigned k = 0; k < n; ++k) {
    out.push_back(expect_cyclic(x * v_pow) * v_inv_pow);
    v_pow = v_pow * v;
    v_inv_pow = v_inv_pow * v_adj;
  }
  return out;
}

template <CoefficientField S>
Element<S> spectral_component(const Element<S>& x, unsigned k) {
  const unsigned n = x.rank();
  if (k >= n) throw InvalidArgument("spectral_component: k must lie in 0..n-1");
  const Element<S> v = spectral_unitary<S>(n);
  return expect_cyclic(x * v.pow(k)) * v.adjoint().pow(k);
}

}  // namespace cuntz
