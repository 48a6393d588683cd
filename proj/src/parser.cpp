#include "frontal/parser.hpp"

#include <algorithm>
#include <cctype>

namespace frontal {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

constexpr int kMaxExponent = 1000;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(l, cc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, const std::vector<std::string>& vars)
      : toks_(std::move(toks)), vars_(vars) {}

  Poly parse() {
    if (peek().kind == Tok::End) fail(peek(), "empty expression");
    Poly p = expr();
    const Token& t = peek();
    if (t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen)
      fail(t, "implicit multiplication is not allowed; write '*'");
    if (t.kind == Tok::RParen) fail(t, "unbalanced ')'");
    if (t.kind != Tok::End) fail(t, "unexpected '" + t.text + "'");
    return p;
  }

private:
  std::vector<Token> toks_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  Poly expr() {
    Poly p = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Poly t = term();
      if (minus) p -= t;
      else p += t;
    }
    return p;
  }

  Poly term() {
    Poly p = unary();
    while (peek().kind == Tok::Star) {
      next();
      p = p * unary();
    }
    return p;
  }

  Poly unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& t = peek();
    if (t.kind == Tok::Minus) fail(t, "negative exponents are not allowed");
    if (t.kind != Tok::Number) fail(t, "exponent must be a nonnegative integer literal");
    next();
    if (t.text.size() > 4 || std::stoi(t.text) > kMaxExponent)
      fail(t, "exponent exceeds " + std::to_string(kMaxExponent));
    if (peek().kind == Tok::Caret) fail(peek(), "chained '^' is ambiguous; use parentheses");
    return base.pow(static_cast<unsigned>(std::stoi(t.text)));
  }

  Poly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        mpz_class num(t.text);
        if (peek().kind == Tok::Slash) {
          next();
          const Token& d = peek();
          if (d.kind != Tok::Number) fail(d, "expected an integer denominator after '/'");
          next();
          mpz_class den(d.text);
          if (den == 0) fail(d, "zero denominator");
          Scalar q(num, den);
          q.canonicalize();
          return Poly::constant(vars_, q);
        }
        return Poly::constant(vars_, Scalar(num));
      }
      case Tok::Ident: {
        next();
        if (std::find(vars_.begin(), vars_.end(), t.text) == vars_.end())
          fail(t, "unknown identifier '" + t.text + "'");
        return Poly::variable(vars_, t.text);
      }
      case Tok::LParen: {
        next();
        Poly p = expr();
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
        next();
        return p;
      }
      case Tok::End: fail(t, "unexpected end of input");
      default: fail(t, "unexpected '" + t.text + "'");
    }
  }
};

}  // namespace

Poly parse_expression(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(tokenize(text), vars).parse();
}

}  // namespace frontal
