#include "cuntz/numeric.hpp"

#include <cmath>
#include <sstream>

#include "cuntz/error.hpp"

namespace cuntz {
namespace {

NumericSettings g_settings;

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

Real from_mpq(const Rational& r) {
  Real num(r.get_num().get_mpz_t());
  Real den(r.get_den().get_mpz_t());
  return num / den;
}

// Boost's own default is 20 digits; start at the documented 128 bits.
const bool g_precision_applied = (Real::default_precision(digits10_for_bits(NumericSettings{}.precision_bits)), true);

}  // namespace

void configure_numeric(const NumericSettings& settings) {
  if (settings.precision_bits < 53) throw InvalidArgument("numeric precision must be at least 53 bits");
  if (!(settings.tolerance > 0)) throw InvalidArgument("numeric tolerance must be positive");
  g_settings = settings;
  Real::default_precision(digits10_for_bits(settings.precision_bits));
}

const NumericSettings& numeric_settings() { return g_settings; }

NumericScalar::NumericScalar(const Rational& value) : re_(from_mpq(value)), im_(0) {}

NumericScalar NumericScalar::root_of_unity(unsigned M, std::int64_t k) {
  if (M == 0) throw InvalidArgument("root of unity order must be positive");
  const std::int64_t m = M;
  const std::int64_t e = ((k % m) + m) % m;
  // exact values on the axes keep small cases free of rounding noise
  if (4 * e % m == 0) {
    switch (4 * e / m) {
      case 0: return NumericScalar(1L);
      case 1: return {Real(0), Real(1)};
      case 2: return NumericScalar(-1L);
      default: return {Real(0), Real(-1)};
    }
  }
  // acos(-1) is evaluated by MPFR at the working precision
  const Real angle = 2 * acos(Real(-1)) * e / m;
  return {cos(angle), sin(angle)};
}

NumericScalar NumericScalar::sqrt_int(unsigned m) { return {sqrt(Real(m)), Real(0)}; }

Real NumericScalar::abs() const { return sqrt(re_ * re_ + im_ * im_); }

bool NumericScalar::is_zero() const { return abs() < g_settings.tolerance; }

bool NumericScalar::prunable() const {
  const Real eps = pow(Real(2), -static_cast<int>(g_settings.precision_bits) + 16);
  return re_ * re_ + im_ * im_ < eps * eps;
}

NumericScalar& NumericScalar::operator+=(const NumericScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

NumericScalar& NumericScalar::operator-=(const NumericScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

NumericScalar& NumericScalar::operator*=(const NumericScalar& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string NumericScalar::to_string() const {
  std::ostringstream os;
  os << std::fixed;
  os.precision(30);
  const bool has_im = !(im_ == 0);
  const bool has_re = !(re_ == 0) || !has_im;
  if (has_re && !has_im) {
    os << re_;
    return os.str();
  }
  os << '(';
  if (has_re) os << re_ << (im_ < 0 ? " - " : " + ");
  else if (im_ < 0) os << '-';
  os << Real(boost::multiprecision::abs(im_)) << "*zeta(4,1))";
  return os.str();
}

NumericScalar embed_numeric(const CycloScalar& s, unsigned precision_bits) {
  if (precision_bits < 53) throw InvalidArgument("precision must be at least 53 bits");
  const unsigned d10 = digits10_for_bits(precision_bits);
  const unsigned saved = Real::default_precision();
  Real::default_precision(std::max(saved, d10));
  NumericScalar acc;
  for (unsigned i = 0; i < s.coeffs().size(); ++i) {
    if (sgn(s.coeffs()[i]) == 0) continue;
    acc += NumericScalar(s.coeffs()[i]) * NumericScalar::root_of_unity(s.order(), i);
  }
  Real::default_precision(saved);
  return acc;
}

}  // namespace cuntz
