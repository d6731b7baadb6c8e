#pragma once

// Seeded generators for property checks. Samples are drawn as backend-free
// specs (words, rationals, root-of-unity exponents) and only then realized in
// a coefficient field, so both backends see identical inputs.

#include <cstdint>
#include <random>
#include <vector>

#include "cuntz/algebra.hpp"

namespace cuntz {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  Word word(unsigned n, unsigned max_len) {
    Word w(below(max_len + 1));
    for (auto& l : w) l = static_cast<Letter>(1 + below(n));
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

struct TermSpec {
  Monomial monomial;
  Rational coeff;
  unsigned root_order = 1;
  std::int64_t root_exponent = 0;
};

using ElementSpec = std::vector<TermSpec>;

struct SampleShape {
  unsigned max_terms = 3;
  unsigned max_word = 2;
  /// Coefficients are small rationals times zeta_{root_order}^k.
  unsigned root_order = 1;
};

inline ElementSpec random_element_spec(Sampler& rng, unsigned n, const SampleShape& shape) {
  static const Rational kCoeffs[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                     Rational(-1, 3), Rational(3)};
  ElementSpec spec(1 + rng.below(shape.max_terms));
  for (auto& t : spec) {
    t.monomial = {rng.word(n, shape.max_word), rng.word(n, shape.max_word)};
    t.coeff = kCoeffs[rng.below(std::size(kCoeffs))];
    t.root_order = shape.root_order;
    t.root_exponent = static_cast<std::int64_t>(rng.below(shape.root_order));
  }
  return spec;
}

/// A spec whose realized element is guaranteed nonzero: a single term.
inline ElementSpec random_monomial_spec(Sampler& rng, unsigned n, const SampleShape& shape) {
  SampleShape one = shape;
  one.max_terms = 1;
  return random_element_spec(rng, n, one);
}

template <CoefficientField S>
Element<S> realize(const ElementSpec& spec, unsigned n) {
  Element<S> out(n);
  for (const auto& t : spec) {
    S c = S::from_rational(t.coeff);
    if (t.root_order > 1) c = c * S::root_of_unity(t.root_order, t.root_exponent);
    out += Element<S>::monomial(n, t.monomial, c);
  }
  return out;
}

}  // namespace cuntz
