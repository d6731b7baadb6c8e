#pragma once

// Expression language for elements of O_n.
//
//   element := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom "'"* | '(' element ')' "'"*
//   atom    := 'S' digits | 'zeta(' int ',' int ')' | 'sqrt(' int ')' | rational
//
// rational is digits, digits '/' digits, or a decimal digits '.' digits. A
// tick is the adjoint and binds tighter than '*'. Whitespace is ignored.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/error.hpp"
#include "cuntz/numeric.hpp"
#include "cuntz/scalar.hpp"

namespace cuntz {

class ParseError : public Error {
 public:
  ParseError(unsigned line, unsigned column, std::set<std::string> expected, const std::string& message);

  unsigned line() const noexcept { return line_; }
  unsigned column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  unsigned line_;
  unsigned column_;
  std::set<std::string> expected_;
};

enum class TokenKind { generator, number, zeta, sqrt, lparen, rparen, comma, plus, minus, star, tick, end };

struct Token {
  TokenKind kind;
  std::string text;
  unsigned line = 1;
  unsigned column = 1;
};

std::string describe(TokenKind kind);

/// Splits text into tokens; the last token is always `end`.
std::vector<Token> tokenize(const std::string& text);

namespace detail {

template <CoefficientField S>
class ElementParser {
 public:
  using Elem = Element<S>;

  ElementParser(const std::string& text, unsigned n) : tokens_(tokenize(text)), n_(n) {}

  Elem parse() {
    Elem out = element();
    expect(TokenKind::end, {"'+'", "'-'", "'*'", "\"'\"", "end of input"});
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(TokenKind k, std::set<std::string> expected) {
    if (peek().kind != k) fail(std::move(expected));
    return tokens_[pos_++];
  }
  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
    std::string list;
    for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
    throw ParseError(t.line, t.column, std::move(expected),
                     "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": expected " +
                         list + ", found " + found);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& what) const {
    throw ParseError(t.line, t.column, {},
                     "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + what);
  }

  static std::set<std::string> factor_starts() {
    return {"generator S<k>", "number", "'zeta('", "'sqrt('", "'('"};
  }

  Elem element() {
    bool negate = false;
    if (accept(TokenKind::minus)) negate = true;
    else accept(TokenKind::plus);
    Elem out = term();
    if (negate) out = -out;
    for (;;) {
      if (accept(TokenKind::plus)) out += term();
      else if (accept(TokenKind::minus)) out -= term();
      else return out;
    }
  }

  Elem term() {
    Elem out = factor();
    while (accept(TokenKind::star)) out = out * factor();
    return out;
  }

  Elem factor() {
    Elem out(n_);
    if (accept(TokenKind::lparen)) {
      out = element();
      expect(TokenKind::rparen, {"')'", "'+'", "'-'", "'*'", "\"'\""});
    } else {
      out = atom();
    }
    while (accept(TokenKind::tick)) out = out.adjoint();
    return out;
  }

  std::int64_t integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && accept(TokenKind::minus)) negative = true;
    else if (allow_sign) accept(TokenKind::plus);
    const Token& t = expect(TokenKind::number, {"integer"});
    if (t.text.find_first_not_of("0123456789") != std::string::npos || t.text.size() > 9)
      fail_at(t, "malformed scalar: expected a small integer, found '" + t.text + "'");
    const std::int64_t v = std::stoll(t.text);
    return negative ? -v : v;
  }

  Elem atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::generator: {
        ++pos_;
        const std::string digits = t.text.substr(1);
        if (digits.size() > 3 || std::stoul(digits) < 1 || std::stoul(digits) > n_)
          fail_at(t, "generator index out of range: " + t.text + " with n=" + std::to_string(n_));
        return Elem::generator(n_, static_cast<unsigned>(std::stoul(digits)));
      }
      case TokenKind::number: {
        ++pos_;
        Rational r;
        try {
          r = parse_number(t.text);
        } catch (const Error& e) {
          fail_at(t, std::string("malformed scalar: ") + e.what());
        }
        return Elem::scalar(n_, S::from_rational(r));
      }
      case TokenKind::zeta: {
        ++pos_;
        const Token& at = peek();
        const std::int64_t M = integer(false);
        expect(TokenKind::comma, {"','"});
        const std::int64_t k = integer(true);
        expect(TokenKind::rparen, {"')'"});
        if (M < 1) fail_at(at, "malformed scalar: zeta order must be positive");
        return Elem::scalar(n_, S::root_of_unity(static_cast<unsigned>(M), k));
      }
      case TokenKind::sqrt: {
        ++pos_;
        const Token& at = peek();
        const std::int64_t m = integer(false);
        expect(TokenKind::rparen, {"')'"});
        if (m < 1) fail_at(at, "malformed scalar: sqrt argument must be positive");
        return Elem::scalar(n_, S::sqrt_int(static_cast<unsigned>(m)));
      }
      default:
        fail(factor_starts());
    }
  }

  static Rational parse_number(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    const std::string frac = text.substr(dot + 1);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(Integer(text.substr(0, dot) + frac, 10), scale);
    r.canonicalize();
    return r;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  unsigned n_;
};

struct CoefficientText {
  bool negative = false;
  bool unit = false;    // magnitude is exactly 1
  bool simple = true;   // magnitude prints as a single factor
  std::string magnitude;
};

CoefficientText coefficient_text(const CycloScalar& c);
CoefficientText coefficient_text(const NumericScalar& c);

std::string monomial_text(const Monomial& m);

}  // namespace detail

template <CoefficientField S>
Element<S> parse_element(const std::string& text, unsigned n) {
  return detail::ElementParser<S>(text, n).parse();
}

/// Contracted, sorted display form; parse_element reads it back.
template <CoefficientField S>
std::string format_element(const Element<S>& x) {
  const auto terms = x.contracted().sorted_terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const auto ct = detail::coefficient_text(c);
    if (first) out += ct.negative ? "-" : "";
    else out += ct.negative ? " - " : " + ";
    first = false;
    const std::string mag = ct.simple ? ct.magnitude : "(" + ct.magnitude + ")";
    if (m.is_unit()) out += mag;
    else if (ct.unit) out += detail::monomial_text(m);
    else out += mag + "*" + detail::monomial_text(m);
  }
  return out;
}

}  // namespace cuntz
