#pragma once

// Complex floating-point coefficients at a configurable MPFR precision. This
// backend exists to cross-check the exact one; its equality is approximate.

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

#include "cuntz/scalar.hpp"

namespace cuntz {

using Real = boost::multiprecision::mpfr_float;

struct NumericSettings {
  unsigned precision_bits = 128;
  double tolerance = 1e-10;
};

/// Process-wide settings for the numeric backend. Call before constructing
/// values; existing values keep the precision they were built with.
void configure_numeric(const NumericSettings& settings);
const NumericSettings& numeric_settings();

class NumericScalar {
 public:
  NumericScalar() : re_(0), im_(0) {}
  NumericScalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  NumericScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  NumericScalar(long value) : re_(value), im_(0) {}  // NOLINT

  static NumericScalar zero() { return {}; }
  static NumericScalar one() { return NumericScalar(1L); }
  static NumericScalar from_rational(const Rational& r) { return NumericScalar(r); }
  static NumericScalar root_of_unity(unsigned M, std::int64_t k);
  static NumericScalar sqrt_int(unsigned m);

  const Real& real() const noexcept { return re_; }
  const Real& imag() const noexcept { return im_; }

  NumericScalar conj() const { return {re_, -im_}; }
  Real abs() const;

  /// |z| below the configured tolerance.
  bool is_zero() const;
  /// |z| negligible at working precision; such terms are dropped from elements.
  bool prunable() const;

  NumericScalar operator-() const { return {-re_, -im_}; }
  NumericScalar& operator+=(const NumericScalar& o);
  NumericScalar& operator-=(const NumericScalar& o);
  NumericScalar& operator*=(const NumericScalar& o);

  friend NumericScalar operator+(NumericScalar a, const NumericScalar& b) { return a += b; }
  friend NumericScalar operator-(NumericScalar a, const NumericScalar& b) { return a -= b; }
  friend NumericScalar operator*(NumericScalar a, const NumericScalar& b) { return a *= b; }
  friend bool operator==(const NumericScalar& a, const NumericScalar& b) { return (a - b).is_zero(); }

  double real_approx() const { return re_.convert_to<double>(); }
  double imag_approx() const { return im_.convert_to<double>(); }

  /// Decimal text that the element parser accepts, e.g. "(0.5 + 0.25*zeta(4,1))".
  std::string to_string() const;

 private:
  Real re_;
  Real im_;
};

/// Evaluates s at zeta_M = exp(2 pi i / M) with at least `precision_bits` bits.
NumericScalar embed_numeric(const CycloScalar& s, unsigned precision_bits);

}  // namespace cuntz
