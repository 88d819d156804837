#include "germforge/parse.hpp"

#include <cctype>
#include <string>

#include "germforge/error.hpp"

namespace germforge {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, int line, int column)
      : text_(text), ring_(ring), line_(line), column_(column) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) {
    throw ParseError(code, msg, line_, column_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
        continue;
      }
      if (accept('/')) {
        int l = line_, col = column_;
        divisor_ = true;
        Polynomial d = unary();
        divisor_ = false;
        if (!d.is_constant() || d.is_zero()) throw ParseError(ErrorCode::SyntaxError, "division by a non-constant or zero", l, col);
        acc = acc * Rational(1 / d.constant_term());
        continue;
      }
      skip_space();
      // Juxtaposition after a literal: "2x", "3/4 y".
      if (last_was_literal_ && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(')) {
        acc *= unary();
        continue;
      }
      return acc;
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
      Integer e = integer();
      if (e > 10000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
      last_was_literal_ = false;
    }
    return base;
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Integer(digits);
  }

  Polynomial atom() {
    skip_space();
    last_was_literal_ = false;
    char c = peek();
    if (c == '(') {
      advance();
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      std::size_t save = pos_;
      int save_line = line_, save_col = column_;
      skip_space();
      if (peek() == '/' && !divisor_) {
        advance();
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer denominator");
        den = integer();
        if (den == 0) fail("zero denominator");
      } else {
        pos_ = save;
        line_ = save_line;
        column_ = save_col;
      }
      Rational q(num, den);
      q.canonicalize();
      last_was_literal_ = true;
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      int l = line_, col = column_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        advance();
      }
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError(ErrorCode::UnknownVariable, "unknown variable '" + name + "'", l, col);
      return Polynomial::variable(ring_, *idx);
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
  bool last_was_literal_ = false;
  // "x/2/3" divides twice rather than by the literal 2/3
  bool divisor_ = false;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring, int line, int column) {
  return PolyParser(text, ring, line, column).parse();
}

}  // namespace germforge
