#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "segre/polynomial.hpp"

namespace segre {

/// Recursive-descent parser for the expression grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := name | uint | '(' expr ')'
/// Integer literals are reduced modulo the ring characteristic.
class PolynomialParser {
public:
  explicit PolynomialParser(RingPtr ring) : ring_(std::move(ring)) {}

  Polynomial parse(std::string_view text) {
    text_ = text;
    pos_ = 0;
    Polynomial f = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return f;
  }

private:
  Polynomial parse_expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      unsigned long long e = parse_uint_raw();
      if (e > 0xFFFF) throw ParseError("exponent exceeds 16-bit bound", at);
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Polynomial parse_base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Reduce digit by digit so literals of any length are accepted.
      const PrimeField& F = ring_->field;
      std::uint32_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = F.reduce(static_cast<std::uint64_t>(v) * 10 +
                     static_cast<std::uint64_t>(peek() - '0'));
        ++pos_;
      }
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name = parse_name();
      int idx = ring_->var_index(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
      return Polynomial::variable(ring_, idx);
    }
    throw ParseError(c == '\0' ? "unexpected end of input"
                               : std::string("unexpected character '") + c + "'",
                     pos_);
  }

  unsigned long long parse_uint_raw() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected integer", pos_);
    }
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long long>(peek() - '0');
      if (v > 0xFFFFFFFFull) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return v;
  }

  std::string parse_name() {
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += text_[pos_++];
    }
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
  return PolynomialParser(std::move(ring)).parse(text);
}

}  // namespace segre
