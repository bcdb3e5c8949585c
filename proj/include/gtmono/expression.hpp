#pragma once

#include "gtmono/clifford.hpp"
#include "gtmono/poly.hpp"
#include "gtmono/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gtmono {

class ParseError : public Error {
public:
  ParseError(const std::string &message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

namespace detail {

enum class TokenKind { integer, rational, imaginary, variable, blade, plus, minus, star,
                       caret, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t t = 0; t < n; ++t, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto digits_at = [&](std::size_t pos) {
    std::size_t end = pos;
    while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end])))
      ++end;
    return end - pos;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, col = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = digits_at(i);
      TokenKind kind = TokenKind::integer;
      if (i + n < src.size() && src[i + n] == '/') {
        std::size_t d = digits_at(i + n + 1);
        if (d == 0)
          throw ParseError("expected denominator digits after '/'", line,
                           column + static_cast<int>(n) + 1);
        n += 1 + d;
        kind = TokenKind::rational;
      }
      out.push_back({kind, std::string(src.substr(i, n)), l, col});
      advance(n);
      continue;
    }
    if (c == 'x' || c == 'e') {
      std::size_t n = digits_at(i + 1);
      if (n == 0)
        throw ParseError(std::string("expected digits after '") + c + "'", l, col);
      out.push_back({c == 'x' ? TokenKind::variable : TokenKind::blade,
                     std::string(src.substr(i + 1, n)), l, col});
      advance(n + 1);
      continue;
    }
    if (c == 'i') {
      out.push_back({TokenKind::imaginary, "i", l, col});
      advance(1);
      continue;
    }
    TokenKind kind;
    switch (c) {
    case '+': kind = TokenKind::plus; break;
    case '-': kind = TokenKind::minus; break;
    case '*': kind = TokenKind::star; break;
    case '^': kind = TokenKind::caret; break;
    case '(': kind = TokenKind::lparen; break;
    case ')': kind = TokenKind::rparen; break;
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", l, col);
    }
    out.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({TokenKind::end, "", line, column});
  return out;
}

/// Recursive descent over
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | rational | 'i' | x<n> | e<digits> | '(' expr ')'
/// Products keep their left-to-right order.
class Parser {
public:
  Parser(std::string_view src, int nvars, int alg_dim)
      : tokens_(tokenize(src)), nvars_(nvars), alg_(alg_dim) {}

  CliffPoly parse() {
    CliffPoly p = expr();
    if (peek().kind != TokenKind::end)
      fail(peek().kind == TokenKind::rparen ? "unbalanced ')'"
                                            : "expected operator (implicit multiplication is not allowed)");
    return p;
  }

private:
  const Token &peek() const { return tokens_[pos_]; }
  const Token &next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  [[noreturn]] void fail_at(const Token &t, const std::string &msg) const {
    throw ParseError(msg, t.line, t.column);
  }

  CliffPoly constant(GaussianRational c) const { return CliffPoly::scalar(nvars_, alg_, std::move(c)); }

  CliffPoly expr() {
    CliffPoly acc = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const bool minus = next().kind == TokenKind::minus;
      CliffPoly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  CliffPoly term() {
    CliffPoly acc = unary();
    while (peek().kind == TokenKind::star) {
      next();
      acc = acc * unary();
    }
    return acc;
  }

  CliffPoly unary() {
    if (peek().kind == TokenKind::minus) {
      next();
      return -unary();
    }
    if (peek().kind == TokenKind::plus) {
      next();
      return unary();
    }
    return power_expr();
  }

  CliffPoly power_expr() {
    const Token &start = peek();
    const bool atomic_base = start.kind != TokenKind::rational;
    CliffPoly base = atom();
    if (peek().kind != TokenKind::caret)
      return base;
    const Token &caret = next();
    if (!atomic_base)
      fail_at(caret, "exponent on a non-atomic base needs parentheses");
    if (peek().kind != TokenKind::integer)
      fail("exponent must be a nonnegative integer");
    const Token &exp = next();
    if (exp.text.size() > 4)
      fail_at(exp, "exponent too large");
    CliffPoly out = power(base, static_cast<unsigned>(std::stoul(exp.text)));
    if (peek().kind == TokenKind::caret)
      fail("exponent on a non-atomic base needs parentheses");
    return out;
  }

  CliffPoly atom() {
    const Token &t = peek();
    switch (t.kind) {
    case TokenKind::integer:
    case TokenKind::rational:
      next();
      return constant(GaussianRational(parse_rational(t.text)));
    case TokenKind::imaginary:
      next();
      return constant(GaussianRational::i());
    case TokenKind::variable: {
      next();
      if (t.text.size() > 3 || std::stoi(t.text) < 1 || std::stoi(t.text) > nvars_)
        fail_at(t, "variable x" + t.text + " outside x1..x" + std::to_string(nvars_));
      return CliffPoly::variable(nvars_, alg_, std::stoi(t.text));
    }
    case TokenKind::blade: {
      next();
      return CliffPoly::constant(nvars_, blade_value(t));
    }
    case TokenKind::lparen: {
      next();
      CliffPoly inner = expr();
      if (peek().kind != TokenKind::rparen)
        fail("expected ')'");
      next();
      return inner;
    }
    case TokenKind::end:
      fail("unexpected end of input");
    default:
      fail("unexpected '" + t.text + "'");
    }
  }

  /// With alg <= 9 every digit is one index (e135 = e1 e3 e5); otherwise the
  /// digits form a single index.
  Multivector blade_value(const Token &t) const {
    std::vector<int> indices;
    if (alg_ <= 9) {
      for (char d : t.text)
        indices.push_back(d - '0');
    } else {
      indices.push_back(t.text.size() > 3 ? 1000 : std::stoi(t.text));
    }
    Multivector out = Multivector::scalar(alg_, 1);
    for (int idx : indices) {
      if (idx < 1 || idx > alg_)
        fail_at(t, "blade index " + std::to_string(idx) + " exceeds m = " + std::to_string(alg_));
      out = out * Multivector::basis_vector(alg_, idx);
    }
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int nvars_;
  int alg_;
};

} // namespace detail

/// Parses an expression in x1..x_nvars with blades from C_alg_dim.
inline CliffPoly parse_poly(std::string_view text, int nvars, int alg_dim) {
  return detail::Parser(text, nvars, alg_dim).parse();
}

inline CliffPoly parse_poly(std::string_view text, int m) { return parse_poly(text, m, m); }

/// Text form accepted back by parse_poly.
inline std::string to_expression(const CliffPoly &p) {
  if (p.is_zero())
    return "0";
  auto blade_text = [&](BladeMask mask) {
    std::string s;
    const bool packed = p.algebra_dimension() <= 9;
    for (int idx : blade_indices(mask)) {
      if (packed)
        s += s.empty() ? "e" + std::to_string(idx) : std::to_string(idx);
      else
        s += (s.empty() ? "e" : "*e") + std::to_string(idx);
    }
    return s;
  };
  std::string out;
  for (const auto &[e, c] : p.terms()) {
    auto sorted = c.terms();
    std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) {
      return blade_lex_less(x.first, y.first);
    });
    for (const auto &[mask, z] : sorted) {
      if (!out.empty())
        out += " + ";
      std::string coeff;
      if (sgn(z.im()) == 0)
        coeff = to_string(z.re());
      else if (sgn(z.re()) == 0)
        coeff = to_string(z.im()) + "*i";
      else
        coeff = to_string(z.re()) + " + " + to_string(z.im()) + "*i";
      out += "(" + coeff + ")";
      if (mask != 0)
        out += "*" + blade_text(mask);
      for (int v = 0; v < p.nvars(); ++v) {
        if (e[v] == 0)
          continue;
        out += "*x" + std::to_string(v + 1);
        if (e[v] > 1)
          out += "^" + std::to_string(e[v]);
      }
    }
  }
  return out;
}

} // namespace gtmono
