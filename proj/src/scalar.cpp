#include "cuntz/scalar.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "cuntz/error.hpp"

namespace cuntz {
namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact quotient of num by a monic divisor; the remainder must vanish.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("cyclotomic division: degree underflow");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw Error("cyclotomic division: nonzero remainder");
  return quot;
}

IntPoly compute_cyclotomic(unsigned M) {
  IntPoly num(M + 1, 0);
  num[0] = -1;
  num[M] = 1;
  IntPoly den{1};
  for (unsigned d = 1; d < M; ++d)
    if (M % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  return poly_div_exact(std::move(num), den);
}

// Phi_M together with x^e mod Phi_M for every 0 <= e < M.
struct FieldTables {
  unsigned order = 1;
  unsigned degree = 1;
  IntPoly phi;
  std::vector<IntPoly> power;
};

std::shared_mutex g_cache_mutex;
std::map<unsigned, IntPoly> g_phi_cache;
std::map<unsigned, std::unique_ptr<const FieldTables>> g_table_cache;

const FieldTables& tables(unsigned M) {
  {
    std::shared_lock lock(g_cache_mutex);
    if (auto it = g_table_cache.find(M); it != g_table_cache.end()) return *it->second;
  }
  auto t = std::make_unique<FieldTables>();
  t->order = M;
  t->phi = cyclotomic_polynomial(M);
  t->degree = static_cast<unsigned>(t->phi.size() - 1);
  const unsigned deg = t->degree;
  t->power.reserve(M);
  IntPoly cur(deg, 0);
  cur[0] = 1;
  if (deg == 0) throw Error("degenerate cyclotomic polynomial");
  for (unsigned e = 0; e < M; ++e) {
    t->power.push_back(cur);
    // multiply by x and reduce with the monic Phi_M
    const std::int64_t top = cur[deg - 1];
    for (unsigned i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < deg; ++i) cur[i] -= top * t->phi[i];
  }
  std::unique_lock lock(g_cache_mutex);
  auto [it, inserted] = g_table_cache.emplace(M, std::move(t));
  return *it->second;
}

std::vector<Rational> reduce_exponents(const FieldTables& t, const std::vector<Rational>& by_exp) {
  std::vector<Rational> out(t.degree);
  for (unsigned e = 0; e < by_exp.size(); ++e) {
    if (sgn(by_exp[e]) == 0) continue;
    const IntPoly& p = t.power[e % t.order];
    if (e % t.order < t.degree) {
      out[e % t.order] += by_exp[e];
      continue;
    }
    for (unsigned i = 0; i < t.degree; ++i)
      if (p[i] != 0) out[i] += by_exp[e] * Rational(static_cast<long>(p[i]));
  }
  return out;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned M) {
  if (M == 0) throw InvalidArgument("cyclotomic_polynomial: order must be positive");
  {
    std::shared_lock lock(g_cache_mutex);
    if (auto it = g_phi_cache.find(M); it != g_phi_cache.end()) return it->second;
  }
  IntPoly phi = M == 1 ? IntPoly{-1, 1} : compute_cyclotomic(M);
  std::unique_lock lock(g_cache_mutex);
  auto [it, inserted] = g_phi_cache.emplace(M, std::move(phi));
  return it->second;
}

unsigned euler_phi(unsigned M) {
  unsigned result = M;
  unsigned m = M;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Rational parse_rational(const std::string& text) {
  try {
    Rational r(text, 10);
    if (text.find('/') != std::string::npos && sgn(r.get_den()) == 0)
      throw InvalidArgument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("malformed rational '" + text + "'");
  }
}

CycloScalar::CycloScalar() : order_(1), coeffs_(1) {}

CycloScalar::CycloScalar(Rational value) : order_(1), coeffs_{std::move(value)} {}

CycloScalar::CycloScalar(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CycloScalar CycloScalar::from_powers(unsigned M, const std::vector<Rational>& coeffs) {
  if (M == 0) throw InvalidArgument("root of unity order must be positive");
  const FieldTables& t = tables(M);
  std::vector<Rational> by_exp(M);
  for (std::size_t i = 0; i < coeffs.size(); ++i) by_exp[i % M] += coeffs[i];
  return CycloScalar(M, reduce_exponents(t, by_exp));
}

CycloScalar CycloScalar::root_of_unity(unsigned M, std::int64_t k) {
  if (M == 0) throw InvalidArgument("root of unity order must be positive");
  const std::int64_t m = static_cast<std::int64_t>(M);
  const auto e = static_cast<unsigned>(((k % m) + m) % m);
  const FieldTables& t = tables(M);
  std::vector<Rational> c(t.degree);
  for (unsigned i = 0; i < t.degree; ++i) c[i] = static_cast<long>(t.power[e][i]);
  return CycloScalar(M, std::move(c));
}

CycloScalar CycloScalar::sqrt_int(unsigned m) { return radical(m).value; }

CycloScalar CycloScalar::lift(unsigned L) const {
  if (L == order_) return *this;
  if (L % order_ != 0) throw InvalidArgument("lift target must be a multiple of the order");
  const unsigned step = L / order_;
  std::vector<Rational> by_exp(L);
  for (unsigned i = 0; i < coeffs_.size(); ++i) by_exp[i * step] = coeffs_[i];
  return CycloScalar(L, reduce_exponents(tables(L), by_exp));
}

CycloScalar CycloScalar::conj() const {
  if (order_ <= 2) return *this;
  std::vector<Rational> by_exp(order_);
  for (unsigned i = 0; i < coeffs_.size(); ++i) by_exp[(order_ - i) % order_] = coeffs_[i];
  return CycloScalar(order_, reduce_exponents(tables(order_), by_exp));
}

bool CycloScalar::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& other) {
  if (other.order_ == order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  if (other.is_zero()) return *this;
  const unsigned L = lcm_order(order_, other.order_);
  CycloScalar rhs = other.lift(L);
  *this = lift(L);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& other) { return *this += -other; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& other) { return *this = *this * other; }

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  if (a.order_ == 1 && b.order_ == 1) return CycloScalar(a.coeffs_[0] * b.coeffs_[0]);
  if (a.order_ == 1 || b.order_ == 1) {
    const CycloScalar& r = a.order_ == 1 ? a : b;
    CycloScalar out = a.order_ == 1 ? b : a;
    if (sgn(r.coeffs_[0]) == 0) return CycloScalar();
    for (auto& c : out.coeffs_) c *= r.coeffs_[0];
    return out;
  }
  const unsigned L = lcm_order(a.order_, b.order_);
  const CycloScalar x = a.lift(L);
  const CycloScalar y = b.lift(L);
  std::vector<Rational> by_exp(L);
  for (unsigned i = 0; i < x.coeffs_.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (unsigned j = 0; j < y.coeffs_.size(); ++j) {
      if (sgn(y.coeffs_[j]) == 0) continue;
      by_exp[(i + j) % L] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return CycloScalar(L, reduce_exponents(tables(L), by_exp));
}

double CycloScalar::real_approx() const {
  double acc = 0;
  for (unsigned i = 0; i < coeffs_.size(); ++i)
    acc += coeffs_[i].get_d() * std::cos(2 * std::numbers::pi * i / order_);
  return acc;
}

double CycloScalar::imag_approx() const {
  double acc = 0;
  for (unsigned i = 0; i < coeffs_.size(); ++i)
    acc += coeffs_[i].get_d() * std::sin(2 * std::numbers::pi * i / order_);
  return acc;
}

std::string CycloScalar::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "zeta(" << order_ << ',' << i << ')';
  }
  return os.str();
}

int legendre_symbol(std::int64_t a, unsigned p) {
  const std::int64_t pp = p;
  std::int64_t r = ((a % pp) + pp) % pp;
  if (r == 0) return 0;
  // Euler's criterion
  std::int64_t result = 1;
  std::int64_t base = r;
  std::int64_t e = (pp - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % pp;
    base = base * base % pp;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

Radical radical(unsigned m) {
  if (m == 0) throw InvalidArgument("radical: argument must be positive");
  // m = s^2 f with f squarefree
  unsigned rest = m;
  Integer square_part = 1;
  unsigned f = 1;
  std::vector<unsigned> primes;
  for (unsigned p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) square_part *= p;
    if (e % 2 == 1) {
      f *= p;
      primes.push_back(p);
    }
  }
  if (rest > 1) {
    f *= rest;
    primes.push_back(rest);
  }

  CycloScalar value = Rational(square_part);
  unsigned minus_i_count = 0;
  for (unsigned p : primes) {
    if (p == 2) {
      value *= CycloScalar::root_of_unity(8, 1) + CycloScalar::root_of_unity(8, 7);
      continue;
    }
    std::vector<Rational> gauss(p);
    for (unsigned a = 1; a < p; ++a) gauss[a] = legendre_symbol(a, p);
    value *= CycloScalar::from_powers(p, gauss);
    if (p % 4 == 3) ++minus_i_count;
  }
  // each p = 3 mod 4 contributed i sqrt p; multiply by (-i)^t
  if (minus_i_count % 2 == 1)
    value *= CycloScalar::root_of_unity(4, 3 * static_cast<std::int64_t>(minus_i_count));
  else if (minus_i_count % 4 == 2)
    value = -value;

  const unsigned conductor = f == 1 ? 1 : (f % 4 == 1 ? f : 4 * f);
  return {conductor, value.lift(conductor)};
}

}  // namespace cuntz
