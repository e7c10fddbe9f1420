#pragma once

// Recursive-descent parser shared by NAPolynomial and Element input. The
// Builder supplies the semantics: zero, leaf, literal (y/z monomial), mul,
// scale and add.

#include <cctype>
#include <string>
#include <string_view>

#include "bicomm/error.hpp"
#include "bicomm/monomial.hpp"
#include "bicomm/scalar.hpp"

namespace bicomm {

struct SourcePos {
  int line = 1;
  int column = 1;
};

namespace detail {

template <class Builder>
class ExprParser {
 public:
  using Value = typename Builder::Value;

  ExprParser(std::string_view text, Field field, const Builder& builder)
      : text_(text), field_(field), builder_(builder) {}

  Value parse_all() {
    skip();
    if (at_end()) fail(ErrorCode::Syntax, "empty expression");
    Value v = parse_poly();
    skip();
    if (!at_end()) fail(ErrorCode::Syntax, std::string("unexpected '") + peek() + "'");
    return v;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++here_.line;
      here_.column = 1;
    } else {
      ++here_.column;
    }
    ++pos_;
  }

  void skip() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw ParseError(code, what, here_.line, here_.column);
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    if (out.empty()) fail(ErrorCode::Syntax, "expected digits");
    return out;
  }

  std::uint32_t index() {
    SourcePos at = here_;
    std::string d = digits();
    unsigned long long v = 0;
    try {
      v = std::stoull(d);
    } catch (const std::exception&) {
      v = ~0ull;
    }
    if (v == 0) throw ParseError(ErrorCode::BadIndex, "variable index 0", at.line, at.column);
    if (v > 0xFFFFFFFFull) throw ParseError(ErrorCode::BadIndex, "variable index too large", at.line, at.column);
    return static_cast<std::uint32_t>(v);
  }

  Value parse_poly() {
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    Value acc = signed_term(negative);
    while (true) {
      skip();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      advance();
      acc = builder_.add(std::move(acc), signed_term(negative));
    }
    return acc;
  }

  Value signed_term(bool negative) {
    Value v = parse_term();
    if (negative) v = builder_.scale(-Scalar::one(field_), std::move(v));
    return v;
  }

  Value parse_term() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      SourcePos at = here_;
      std::string token = digits();
      if (peek() == '/') {
        advance();
        token += '/';
        token += digits();
      }
      Scalar c;
      try {
        c = Scalar::parse(field_, token);
      } catch (const Error& e) {
        throw ParseError(e.code(), "bad scalar '" + token + "'", at.line, at.column);
      }
      skip();
      if (peek() != '*') {
        if (c.is_zero()) return builder_.zero();
        throw ParseError(ErrorCode::Syntax, "constant term '" + token + "' outside the algebra", at.line, at.column);
      }
      advance();
      return builder_.scale(c, parse_product());
    }
    return parse_product();
  }

  Value parse_product() {
    Value a = parse_factor();
    skip();
    if (peek() != '*') return a;
    advance();
    Value b = parse_factor();
    a = builder_.mul(a, b);
    skip();
    if (peek() == '*') fail(ErrorCode::AmbiguousProduct, "product of three or more factors needs parentheses");
    return a;
  }

  Value parse_factor() {
    skip();
    char c = peek();
    if (c == 'x') {
      advance();
      return builder_.leaf(index());
    }
    if (c == '(') {
      advance();
      Value v = parse_poly();
      skip();
      if (peek() != ')') fail(ErrorCode::Syntax, "expected ')'");
      advance();
      return v;
    }
    if (c == 'y' || c == 'z') return parse_literal();
    if (at_end()) fail(ErrorCode::Syntax, "unexpected end of input");
    fail(ErrorCode::Syntax, std::string("unexpected '") + c + "'");
  }

  // A maximal y/z chain "y1^2*z1*z3" is one commutative factor.
  Value parse_literal() {
    SourcePos at = here_;
    Monomial m;
    while (true) {
      char var = peek();
      advance();
      std::uint32_t i = index();
      std::uint32_t e = 1;
      if (peek() == '^') {
        advance();
        e = static_cast<std::uint32_t>(std::stoul(digits()));
      }
      m *= var == 'y' ? Monomial::y(i, e) : Monomial::z(i, e);
      std::size_t save_pos = pos_;
      SourcePos save_here = here_;
      skip();
      if (peek() == '*') {
        advance();
        skip();
        if (peek() == 'y' || peek() == 'z') continue;
      }
      pos_ = save_pos;
      here_ = save_here;
      break;
    }
    return builder_.literal(m, at);
  }

  std::string_view text_;
  Field field_;
  const Builder& builder_;
  std::size_t pos_ = 0;
  SourcePos here_;
};

}  // namespace detail
}  // namespace bicomm
