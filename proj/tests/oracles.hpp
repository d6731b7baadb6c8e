#pragma once

// Independent reference computations used by the unit tests. None of these
// call the engine's expansion, equality or field-reduction code.

#include <complex>
#include <map>
#include <numeric>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/scalar.hpp"

namespace oracle {

using cuntz::Letter;
using cuntz::Word;

// Action on basis vectors e_w of the free vector space on words:
// S_a S_b^* e_{b u} = e_{a u}, and 0 when w does not start with b. On words
// at least as long as every |b| this is a homomorphism, and it separates
// distinct elements once |w| reaches the longest |b|.
template <typename S>
std::map<std::pair<Word, Word>, S> word_action(const cuntz::Element<S>& x, std::size_t L) {
  std::map<std::pair<Word, Word>, S> out;
  const unsigned n = x.rank();
  std::vector<Word> words{Word{}};
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (unsigned i = 1; i <= n; ++i) {
        Word v = w;
        v.push_back(static_cast<Letter>(i));
        next.push_back(v);
      }
    words = std::move(next);
  }
  for (const auto& w : words)
    for (const auto& [m, c] : x.terms()) {
      if (m.beta.size() > w.size() || !std::equal(m.beta.begin(), m.beta.end(), w.begin())) continue;
      Word image = m.alpha;
      image.insert(image.end(), w.begin() + m.beta.size(), w.end());
      auto key = std::make_pair(w, image);
      auto it = out.find(key);
      if (it == out.end()) out.emplace(key, c);
      else it->second = it->second + c;
    }
  return out;
}

// x e_w as a sparse vector.
template <typename S>
std::map<Word, S> apply_word(const cuntz::Element<S>& x, const Word& w) {
  std::map<Word, S> out;
  for (const auto& [m, c] : x.terms()) {
    if (m.beta.size() > w.size() || !std::equal(m.beta.begin(), m.beta.end(), w.begin())) continue;
    Word image = m.alpha;
    image.insert(image.end(), w.begin() + m.beta.size(), w.end());
    auto it = out.find(image);
    if (it == out.end()) out.emplace(image, c);
    else it->second = it->second + c;
  }
  return out;
}

template <typename S>
std::size_t longest_beta(const cuntz::Element<S>& x) {
  std::size_t L = 0;
  for (const auto& [m, c] : x.terms()) L = std::max(L, m.beta.size());
  return L;
}

template <typename S>
bool same_action(const cuntz::Element<S>& a, const cuntz::Element<S>& b) {
  const std::size_t L = std::max(longest_beta(a), longest_beta(b));
  auto left = word_action(a, L);
  const auto right = word_action(b, L);
  for (const auto& [k, c] : right) {
    auto it = left.find(k);
    if (it == left.end()) left.emplace(k, -c);
    else it->second = it->second - c;
  }
  for (const auto& [k, c] : left)
    if (!c.is_zero()) return false;
  return true;
}

// Phi_M from its complex roots, rounded to integers.
inline std::vector<long long> cyclotomic_by_roots(unsigned M) {
  using C = std::complex<long double>;
  const long double pi = std::acos(-1.0L);
  std::vector<C> poly{C(1)};
  for (unsigned k = 1; k <= M; ++k) {
    if (std::gcd(k, M) != 1) continue;
    const C root = std::polar(1.0L, 2 * pi * k / M);
    std::vector<C> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<long long> out;
  for (const auto& c : poly) out.push_back(std::llround(c.real()));
  return out;
}

inline std::complex<double> approx(const cuntz::CycloScalar& c) { return {c.real_approx(), c.imag_approx()}; }

// Applies a letter permutation S_i -> S_{p(i)} term by term.
template <typename S, typename F>
cuntz::Element<S> relabel(const cuntz::Element<S>& x, F p) {
  cuntz::Element<S> out(x.rank());
  for (const auto& [m, c] : x.terms()) {
    cuntz::Monomial r;
    for (Letter l : m.alpha) r.alpha.push_back(static_cast<Letter>(p(l)));
    for (Letter l : m.beta) r.beta.push_back(static_cast<Letter>(p(l)));
    out += cuntz::Element<S>::monomial(x.rank(), r, c);
  }
  return out;
}

}  // namespace oracle
