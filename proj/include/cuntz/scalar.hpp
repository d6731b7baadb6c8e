#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_M).
//
// A CycloScalar of order M stores the coefficients of 1, z, ..., z^(phi(M)-1)
// of its unique remainder modulo the M-th cyclotomic polynomial. Operands of
// different orders are lifted to the lcm of their orders before combining, so
// every value lives in a single field and is_zero is an exact equality test.
// Square roots of integers are folded in through quadratic Gauss sums.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cuntz {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer polynomial, coefficients from degree 0 upwards.
using IntPoly = std::vector<std::int64_t>;

/// Phi_M, computed once per M by exact division of x^M - 1 by the lower
/// cyclotomic factors and cached for the lifetime of the process.
const IntPoly& cyclotomic_polynomial(unsigned M);

unsigned euler_phi(unsigned M);

/// Rational from a decimal string "p" or "p/q"; throws InvalidArgument.
Rational parse_rational(const std::string& text);

class CycloScalar {
 public:
  /// Zero, as an element of Q = Q(zeta_1).
  CycloScalar();
  CycloScalar(Rational value);  // NOLINT(google-explicit-constructor)
  CycloScalar(long value) : CycloScalar(Rational(value)) {}  // NOLINT

  static CycloScalar zero() { return CycloScalar(); }
  static CycloScalar one() { return CycloScalar(Rational(1)); }
  static CycloScalar from_rational(const Rational& r) { return CycloScalar(r); }

  /// zeta_M^(k mod M).
  static CycloScalar root_of_unity(unsigned M, std::int64_t k);

  /// The positive square root of m (see `radical`).
  static CycloScalar sqrt_int(unsigned m);

  /// Reduces sum_i coeffs[i] * zeta_M^i (any length) modulo Phi_M.
  static CycloScalar from_powers(unsigned M, const std::vector<Rational>& coeffs);

  unsigned order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// The same value written in Q(zeta_L); L must be a multiple of order().
  CycloScalar lift(unsigned L) const;

  /// Complex conjugation: zeta_M -> zeta_M^(M-1).
  CycloScalar conj() const;

  bool is_zero() const noexcept;
  bool prunable() const noexcept { return is_zero(); }
  bool is_rational() const noexcept;
  /// Valid only when is_rational().
  Rational rational_part() const { return coeffs_.front(); }

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& other);
  CycloScalar& operator-=(const CycloScalar& other);
  CycloScalar& operator*=(const CycloScalar& other);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);

  /// Exact equality (difference is zero).
  friend bool operator==(const CycloScalar& a, const CycloScalar& b) { return (a - b).is_zero(); }

  /// Double-precision embedding with zeta_M = exp(2 pi i / M).
  double real_approx() const;
  double imag_approx() const;

  /// Parseable text: sums of rational * zeta(M,k).
  std::string to_string() const;

 private:
  CycloScalar(unsigned order, std::vector<Rational> coeffs);

  unsigned order_;
  std::vector<Rational> coeffs_;
};

struct Radical {
  unsigned order;
  CycloScalar value;
};

/// sqrt(m) inside Q(zeta_f') where m = s^2 f, f squarefree, and f' is the
/// conductor of Q(sqrt f): f for f = 1 mod 4, 4f otherwise (1 for f = 1).
/// Uses sqrt 2 = zeta_8 + zeta_8^-1 and the quadratic Gauss sums
/// g_p = sum_a (a/p) zeta_p^a, which equal sqrt p (p = 1 mod 4) or
/// i sqrt p (p = 3 mod 4).
Radical radical(unsigned m);

/// Legendre symbol (a/p) for an odd prime p.
int legendre_symbol(std::int64_t a, unsigned p);

}  // namespace cuntz
