#pragma once

// Finite linear combinations of reduced Cuntz words S_alpha S_beta^* in O_n.
//
// Products are reduced with S_i^* S_j = delta_ij only; the relation
// sum_i S_i S_i^* = 1 is not applied syntactically, so one algebra element
// has many representations. Equality is decided instead by `equals`: the
// difference is split into gauge-degree classes and each class is expanded
// to a common |beta| level, where the words form a linear basis.

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/error.hpp"
#include "cuntz/scalar.hpp"

namespace cuntz {

template <class S>
concept CoefficientField = std::copyable<S> && requires(const S a, const S b, const Rational& r,
                                                        unsigned m, std::int64_t k) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.conj() } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.prunable() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { S::from_rational(r) } -> std::convertible_to<S>;
  { S::root_of_unity(m, k) } -> std::convertible_to<S>;
  { S::sqrt_int(m) } -> std::convertible_to<S>;
};

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Reduces a generator index into 1..n ("indices are understood mod n").
inline unsigned wrap_index(std::int64_t i, unsigned n) {
  const std::int64_t m = n;
  return static_cast<unsigned>((((i - 1) % m) + m) % m) + 1;
}

/// S_alpha S_beta^*; the empty/empty pair is the unit.
struct Monomial {
  Word alpha;
  Word beta;

  int degree() const { return static_cast<int>(alpha.size()) - static_cast<int>(beta.size()); }
  bool is_unit() const { return alpha.empty() && beta.empty(); }
  Monomial adjoint() const { return {beta, alpha}; }

  auto operator<=>(const Monomial&) const = default;
};

/// S_a S_b^* . S_c S_d^*, or nullopt when the middle cancels to zero.
std::optional<Monomial> monomial_product(const Monomial& lhs, const Monomial& rhs);

/// Order used for display and serialization: degree, then alpha, then beta.
bool display_less(const Monomial& a, const Monomial& b);

/// Cap on the number of monomials a level expansion may produce.
std::size_t expansion_limit();
void set_expansion_limit(std::size_t cap);
inline constexpr std::size_t kDefaultExpansionLimit = 2'000'000;

/// Number of monomials produced by expanding terms with the given |beta|
/// lengths up to level L, saturating at SIZE_MAX.
std::size_t projected_expansion(unsigned n, const std::vector<std::size_t>& beta_lengths, std::size_t L);

enum class ElementKind { isometry, unitary, selfadjoint, projection };

template <CoefficientField S>
class Element {
 public:
  using Scalar = S;
  using Terms = std::map<Monomial, S>;

  explicit Element(unsigned n) : rank_(n) {
    if (n < 2) throw InvalidArgument("Cuntz rank must be at least 2, got " + std::to_string(n));
    if (n > 255) throw InvalidArgument("Cuntz rank above 255 is not supported");
  }

  static Element zero(unsigned n) { return Element(n); }
  static Element one(unsigned n) { return scalar(n, S::from_rational(1)); }

  static Element scalar(unsigned n, const S& c) {
    Element out(n);
    out.add_term(Monomial{}, c);
    return out;
  }

  /// S_i, 1-based.
  static Element generator(unsigned n, unsigned i) { return monomial(n, Monomial{{checked(n, i)}, {}}); }

  static Element monomial(unsigned n, Monomial m, const S& c = S::from_rational(1)) {
    Element out(n);
    for (Letter l : m.alpha) checked(n, l);
    for (Letter l : m.beta) checked(n, l);
    out.add_term(std::move(m), c);
    return out;
  }

  unsigned rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// No stored terms. Weaker than is_zero(): 1 - S1S1* - S2S2* is zero but not empty.
  bool empty() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& m, const S& c) {
    if (c.prunable()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.prunable()) terms_.erase(it);
  }

  Element adjoint() const {
    Element out(rank_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.adjoint(), c.conj());
    return out;
  }

  Element operator-() const {
    Element out(rank_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  Element& operator+=(const Element& o) {
    require_rank(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Element& operator-=(const Element& o) {
    require_rank(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Element& operator*=(const S& c) {
    Terms out;
    for (auto& [m, v] : terms_) {
      S p = v * c;
      if (!p.prunable()) out.emplace(m, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const S& c) { return a *= c; }
  friend Element operator*(const S& c, Element a) { return a *= c; }

  friend Element operator*(const Element& a, const Element& b) {
    a.require_rank(b);
    Element out(a.rank_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        if (auto m = monomial_product(ma, mb)) out.add_term(*m, ca * cb);
    return out;
  }

  Element pow(unsigned k) const {
    Element out = one(rank_);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Terms grouped by |alpha| - |beta|; the parts sum to *this.
  std::map<int, Element> gauge_components() const {
    std::map<int, Element> out;
    for (const auto& [m, c] : terms_) out.try_emplace(m.degree(), rank_).first->second.terms_.emplace(m, c);
    return out;
  }

  /// Rewrites every term S_a S_b^* as sum_{|mu| = L - |b|} S_{a mu} S_{b mu}^*.
  Element expand_to_level(std::size_t L) const {
    std::vector<std::size_t> lengths;
    for (const auto& [m, c] : terms_) {
      if (m.beta.size() > L)
        throw InvalidArgument("expand_to_level: level " + std::to_string(L) + " is below |beta| = " +
                              std::to_string(m.beta.size()));
      lengths.push_back(m.beta.size());
    }
    guard(lengths, L);
    Element out(rank_);
    for (const auto& [m, c] : terms_) expand_term(m, c, L, out.terms_);
    out.prune();
    return out;
  }

  /// Exact (or tolerance-based, for the numeric backend) equality in O_n.
  bool equals(const Element& o) const {
    require_rank(o);
    return (*this - o).is_zero();
  }

  bool is_zero() const {
    if (terms_.empty()) return true;
    std::map<int, std::vector<const typename Terms::value_type*>> classes;
    for (const auto& t : terms_) classes[t.first.degree()].push_back(&t);
    for (const auto& [degree, members] : classes) {
      std::size_t L = 0;
      std::vector<std::size_t> lengths;
      for (const auto* t : members) {
        L = std::max(L, t->first.beta.size());
        lengths.push_back(t->first.beta.size());
      }
      guard(lengths, L);
      Terms level;
      for (const auto* t : members) expand_term(t->first, t->second, L, level);
      for (const auto& [m, c] : level)
        if (!c.is_zero()) return false;
    }
    return true;
  }

  bool is(ElementKind kind) const {
    const Element id = one(rank_);
    switch (kind) {
      case ElementKind::isometry:
        return (adjoint() * *this).equals(id);
      case ElementKind::unitary:
        return (adjoint() * *this).equals(id) && (*this * adjoint()).equals(id);
      case ElementKind::selfadjoint:
        return equals(adjoint());
      case ElementKind::projection:
        return equals(adjoint()) && equals(*this * *this);
    }
    return false;
  }

  /// Display form: repeatedly replaces full sibling families
  /// {(a i, b i)}_{i=1..n} carrying equal coefficients by (a, b).
  Element contracted() const {
    Element cur = *this;
    for (bool changed = true; changed;) {
      changed = false;
      std::map<Monomial, std::vector<std::pair<Letter, const S*>>> families;
      for (const auto& [m, c] : cur.terms_) {
        if (m.alpha.empty() || m.beta.empty() || m.alpha.back() != m.beta.back()) continue;
        Monomial parent{Word(m.alpha.begin(), m.alpha.end() - 1), Word(m.beta.begin(), m.beta.end() - 1)};
        families[std::move(parent)].emplace_back(m.alpha.back(), &c);
      }
      for (const auto& [parent, kids] : families) {
        if (kids.size() != rank_) continue;
        const bool uniform = std::all_of(kids.begin(), kids.end(),
                                         [&](const auto& k) { return (*k.second - *kids.front().second).is_zero(); });
        if (!uniform) continue;
        const S coeff = *kids.front().second;
        Element next(rank_);
        next.terms_ = cur.terms_;
        for (const auto& k : kids) {
          Monomial child = parent;
          child.alpha.push_back(k.first);
          child.beta.push_back(k.first);
          next.terms_.erase(child);
        }
        next.add_term(parent, coeff);
        cur = std::move(next);
        changed = true;
        break;
      }
    }
    return cur;
  }

  /// Terms in display order (degree, alpha, beta).
  std::vector<std::pair<Monomial, S>> sorted_terms() const {
    std::vector<std::pair<Monomial, S>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return display_less(a.first, b.first); });
    return out;
  }

 private:
  static Letter checked(unsigned n, unsigned i) {
    if (i < 1 || i > n)
      throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    return static_cast<Letter>(i);
  }

  void require_rank(const Element& o) const {
    if (o.rank_ != rank_)
      throw RankMismatch("rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
  }

  void guard(const std::vector<std::size_t>& lengths, std::size_t L) const {
    const std::size_t projected = projected_expansion(rank_, lengths, L);
    if (projected > expansion_limit()) throw ExpansionLimitExceeded(projected, expansion_limit());
  }

  void expand_term(const Monomial& m, const S& c, std::size_t L, Terms& into) const {
    const std::size_t extra = L - m.beta.size();
    if (extra == 0) {
      accumulate(into, m, c);
      return;
    }
    Monomial cur = m;
    const std::size_t a0 = m.alpha.size();
    const std::size_t b0 = m.beta.size();
    cur.alpha.resize(a0 + extra, 1);
    cur.beta.resize(b0 + extra, 1);
    // odometer over suffixes mu in {1..n}^extra
    while (true) {
      accumulate(into, cur, c);
      std::size_t pos = extra;
      while (pos > 0) {
        --pos;
        if (cur.alpha[a0 + pos] < rank_) {
          ++cur.alpha[a0 + pos];
          ++cur.beta[b0 + pos];
          break;
        }
        cur.alpha[a0 + pos] = 1;
        cur.beta[b0 + pos] = 1;
        if (pos == 0) return;
      }
    }
  }

  static void accumulate(Terms& into, const Monomial& m, const S& c) {
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) it->second = it->second + c;
  }

  void prune() {
    std::erase_if(terms_, [](const auto& t) { return t.second.prunable(); });
  }

  unsigned rank_;
  Terms terms_;
};

}  // namespace cuntz
