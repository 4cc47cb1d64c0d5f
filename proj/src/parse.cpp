#include "coulomb/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "coulomb/errors.hpp"
#include "coulomb/rational.hpp"

namespace coulomb {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += advance();
      return {Tok::Number, digits, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += advance();
      return {Tok::Name, name, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      default:
        throw UsageError("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                         ": unexpected character '" + std::string(1, c) + "'");
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, std::int32_t rank) : lexer_(text), rank_(rank) {
    current_ = lexer_.next();
  }

  Poly parse() {
    Poly p = expr();
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& what) {
    throw UsageError("parse error at " + std::to_string(at.line) + ":" +
                     std::to_string(at.column) + ": " + what);
  }

  Token take() {
    Token t = current_;
    current_ = lexer_.next();
    return t;
  }

  bool accept(Tok k) {
    if (current_.kind != k) return false;
    take();
    return true;
  }

  void expect(Tok k, const std::string& what) {
    if (current_.kind != k) fail(current_, "expected " + what);
    take();
  }

  Poly expr() {
    bool negate = accept(Tok::Minus);
    Poly p = term();
    if (negate) p = p.scaled(-1);
    for (;;) {
      if (accept(Tok::Plus)) {
        p = p + term();
      } else if (accept(Tok::Minus)) {
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    while (accept(Tok::Star)) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly base = atom();
    if (!accept(Tok::Caret)) return base;
    Token sign = current_;
    bool negative = accept(Tok::Minus);
    if (current_.kind != Tok::Number) fail(current_, "expected an integer exponent");
    Token num = take();
    long e = 0;
    if (num.text.size() > 6) fail(num, "exponent out of range");
    for (char c : num.text) e = e * 10 + (c - '0');
    if (negative) e = -e;
    if (e < 0) {
      if (base.term_count() != 1) fail(sign, "negative exponent on a non-monomial base");
      const auto& m = base.leading_monomial();
      for (const auto& [v, ve] : m.factors())
        if (!kind_is_laurent(v.kind))
          fail(sign, "negative exponent on non-Laurent variable " + var_name(v));
    }
    return base.pow(static_cast<std::int32_t>(e));
  }

  Poly atom() {
    if (current_.kind == Tok::Number) {
      Token num = take();
      if (accept(Tok::Slash)) {
        if (current_.kind != Tok::Number) fail(current_, "expected a denominator");
        Token den = take();
        auto r = rat_from_string(num.text + "/" + den.text);
        if (!r) fail(den, "zero denominator");
        return Poly::constant(*r);
      }
      return Poly::constant(*rat_from_string(num.text));
    }
    if (current_.kind == Tok::Name) {
      Token name = take();
      auto v = var_from_name(name.text);
      if (!v) fail(name, "unknown variable '" + name.text + "'");
      if (kind_is_indexed(v->kind) && v->index >= rank_)
        fail(name, "variable '" + name.text + "' exceeds rank " + std::to_string(rank_));
      return Poly::variable(*v);
    }
    if (current_.kind == Tok::LParen) {
      take();
      Poly p = expr();
      expect(Tok::RParen, "')'");
      return p;
    }
    fail(current_, "expected a number, variable or '('");
  }

  Lexer lexer_;
  std::int32_t rank_;
  Token current_;
};

}  // namespace

Poly parse_poly(const std::string& text, std::int32_t rank) {
  return Parser(text, rank).parse();
}

}  // namespace coulomb
