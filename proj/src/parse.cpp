#include "cuntz/parse.hpp"

#include <cctype>

namespace cuntz {

ParseError::ParseError(unsigned line, unsigned column, std::set<std::string> expected, const std::string& message)
    : Error(message), line_(line), column_(column), expected_(std::move(expected)) {}

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::generator: return "generator S<k>";
    case TokenKind::number: return "number";
    case TokenKind::zeta: return "'zeta('";
    case TokenKind::sqrt: return "'sqrt('";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::comma: return "','";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::tick: return "\"'\"";
    case TokenKind::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto digits_from = [&](std::size_t j) {
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{TokenKind::end, {}, line, col};
    std::size_t len = 1;
    switch (c) {
      case '(': t.kind = TokenKind::lparen; break;
      case ')': t.kind = TokenKind::rparen; break;
      case ',': t.kind = TokenKind::comma; break;
      case '+': t.kind = TokenKind::plus; break;
      case '-': t.kind = TokenKind::minus; break;
      case '*': t.kind = TokenKind::star; break;
      case '\'': t.kind = TokenKind::tick; break;
      default:
        if (c == 'S' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
          t.kind = TokenKind::generator;
          len = digits_from(i + 1) - i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          t.kind = TokenKind::number;
          std::size_t j = digits_from(i);
          if (j + 1 < text.size() && (text[j] == '/' || text[j] == '.') &&
              std::isdigit(static_cast<unsigned char>(text[j + 1])))
            j = digits_from(j + 1);
          len = j - i;
        } else if (text.compare(i, 5, "zeta(") == 0) {
          t.kind = TokenKind::zeta;
          len = 5;
        } else if (text.compare(i, 5, "sqrt(") == 0) {
          t.kind = TokenKind::sqrt;
          len = 5;
        } else {
          throw ParseError(line, col,
                           {"generator S<k>", "number", "'zeta('", "'sqrt('", "'('", "')'", "','", "'+'", "'-'",
                            "'*'", "\"'\""},
                           "line " + std::to_string(line) + ", column " + std::to_string(col) +
                               ": unexpected character '" + std::string(1, c) + "'");
        }
    }
    t.text = text.substr(i, len);
    out.push_back(std::move(t));
    advance(len);
  }
  out.push_back(Token{TokenKind::end, {}, line, col});
  return out;
}

namespace detail {

CoefficientText coefficient_text(const CycloScalar& c) {
  CoefficientText out;
  if (c.is_rational()) {
    const Rational r = c.rational_part();
    out.negative = sgn(r) < 0;
    const Rational mag = abs(r);
    out.unit = mag == 1;
    out.magnitude = mag.get_str();
    return out;
  }
  // A lone signed power of zeta keeps its sign outside.
  std::size_t nonzero = 0, idx = 0;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i)
    if (sgn(c.coeffs()[i]) != 0) ++nonzero, idx = i;
  if (nonzero == 1) {
    const Rational& r = c.coeffs()[idx];
    out.negative = sgn(r) < 0;
    const CycloScalar mag = out.negative ? -c : c;
    out.magnitude = mag.to_string();
    out.simple = abs(r) == 1;
    return out;
  }
  out.magnitude = c.to_string();
  out.simple = false;
  return out;
}

CoefficientText coefficient_text(const NumericScalar& c) {
  CoefficientText out;
  if (c.imag() == 0) {
    out.negative = c.real() < 0;
    const NumericScalar mag = out.negative ? -c : c;
    out.unit = mag.real() == 1;
    out.magnitude = mag.to_string();
    return out;
  }
  std::string text = c.to_string();  // "(a + b*zeta(4,1))"
  out.magnitude = text.substr(1, text.size() - 2);
  out.simple = false;
  return out;
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (Letter l : m.alpha) out += (out.empty() ? "S" : "*S") + std::to_string(l);
  for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it)
    out += (out.empty() ? "S" : "*S") + std::to_string(*it) + "'";
  return out;
}

}  // namespace detail
}  // namespace cuntz
