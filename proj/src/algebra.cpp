#include "cuntz/algebra.hpp"

#include <limits>

namespace cuntz {
namespace {

std::atomic<std::size_t> g_expansion_limit{kDefaultExpansionLimit};

bool is_prefix(const Word& prefix, const Word& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

}  // namespace

std::optional<Monomial> monomial_product(const Monomial& lhs, const Monomial& rhs) {
  const Word& b = lhs.beta;
  const Word& c = rhs.alpha;
  if (is_prefix(b, c)) {
    // S_b^* S_c = S_{c'} with c = b c'
    Monomial out{lhs.alpha, rhs.beta};
    out.alpha.insert(out.alpha.end(), c.begin() + static_cast<std::ptrdiff_t>(b.size()), c.end());
    return out;
  }
  if (is_prefix(c, b)) {
    // S_b^* S_c = S_{b'}^* with b = c b'
    Monomial out{lhs.alpha, rhs.beta};
    out.beta.insert(out.beta.end(), b.begin() + static_cast<std::ptrdiff_t>(c.size()), b.end());
    return out;
  }
  return std::nullopt;
}

bool display_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.beta < b.beta;
}

std::size_t expansion_limit() { return g_expansion_limit.load(std::memory_order_relaxed); }

void set_expansion_limit(std::size_t cap) { g_expansion_limit.store(cap, std::memory_order_relaxed); }

std::size_t projected_expansion(unsigned n, const std::vector<std::size_t>& beta_lengths, std::size_t L) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  for (std::size_t len : beta_lengths) {
    std::size_t count = 1;
    for (std::size_t i = len; i < L; ++i) {
      if (count > kMax / n) return kMax;
      count *= n;
    }
    if (total > kMax - count) return kMax;
    total += count;
  }
  return total;
}

}  // namespace cuntz
