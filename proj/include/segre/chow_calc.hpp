#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "segre/chow.hpp"

namespace segre {

using CalcValue = std::variant<ChowClass, BigInt>;

/// Evaluator for the small scripting language over classes:
///   class(n, [a0,...,an])        class literal, coefficients of [P^0]..[P^n]
///   ci_segre(n, [d1,...,dr])     complete-intersection Segre class
///   residual(n, delta, E)        residual Segre formula
///   tensor(E, e)                 twist by O(eH)
///   dual(E [, lower|upper])      sign flips
///   cap(E, series(...))          cap with a series in H, e.g. (1+2H)^3
///   integral(E)                  degree of the point part
/// Evaluation is left-to-right with explicit parentheses everywhere.
class ChowCalc {
public:
  explicit ChowCalc(std::string_view text) : text_(text) {}

  CalcValue evaluate() {
    CalcValue v = expr();
    skip();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return v;
  }

private:
  CalcValue expr() {
    skip();
    std::size_t at = pos_;
    std::string name = ident();
    if (name == "class") return parse_class_literal();
    if (name == "ci_segre") return parse_ci();
    if (name == "residual") return parse_residual();
    if (name == "tensor") return parse_tensor();
    if (name == "dual") return parse_dual();
    if (name == "cap") return parse_cap();
    if (name == "integral") {
      expect('(');
      ChowClass c = class_arg();
      expect(')');
      return integral(c);
    }
    throw ParseError("unknown operation '" + name + "'", at);
  }

  ChowClass class_arg() {
    CalcValue v = expr();
    if (!std::holds_alternative<ChowClass>(v)) {
      throw ParseError("expected a class-valued expression", pos_);
    }
    return std::get<ChowClass>(std::move(v));
  }

  ChowClass parse_class_literal() {
    expect('(');
    long long n = integer();
    expect(',');
    std::vector<BigInt> coeffs = int_list();
    expect(')');
    if (static_cast<long long>(coeffs.size()) != n + 1) {
      throw ParseError("class literal needs n+1 coefficients", pos_);
    }
    return ChowClass(static_cast<int>(n), std::move(coeffs));
  }

  ChowClass parse_ci() {
    expect('(');
    long long n = integer();
    expect(',');
    std::vector<BigInt> degs = int_list();
    expect(')');
    return ci_segre(static_cast<int>(n), degs);
  }

  ChowClass parse_residual() {
    expect('(');
    long long n = integer();
    expect(',');
    long long delta = integer();
    expect(',');
    ChowClass rest = class_arg();
    expect(')');
    return residual_segre(static_cast<int>(n), delta, rest);
  }

  ChowClass parse_tensor() {
    expect('(');
    ChowClass c = class_arg();
    expect(',');
    long long e = integer();
    expect(')');
    return tensor_line(c, e);
  }

  ChowClass parse_dual() {
    expect('(');
    ChowClass c = class_arg();
    DualVariant variant = DualVariant::lower;
    skip();
    if (peek() == ',') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      std::string which = ident();
      if (which == "upper") {
        variant = DualVariant::upper;
      } else if (which != "lower") {
        throw ParseError("dual variant must be lower or upper", at);
      }
    }
    expect(')');
    return dual(c, variant);
  }

  ChowClass parse_cap() {
    expect('(');
    ChowClass c = class_arg();
    expect(',');
    skip();
    std::size_t at = pos_;
    std::string name = ident();
    if (name != "series") throw ParseError("expected series(...)", at);
    expect('(');
    HSeries s = series_expr(c.ambient());
    expect(')');
    expect(')');
    return cap(c, s);
  }

  // --- series sub-language: integers, H, juxtaposed "2H", + - * / ^ ---

  HSeries series_expr(int n) {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    HSeries acc = series_term(n);
    if (neg) acc = HSeries::constant(n, -1) * acc;
    for (;;) {
      skip();
      char ch = peek();
      if (ch != '+' && ch != '-') return acc;
      ++pos_;
      HSeries t = series_term(n);
      acc = (ch == '+') ? acc + t : acc - t;
    }
  }

  HSeries series_term(int n) {
    HSeries acc = series_factor(n);
    for (;;) {
      skip();
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc = acc * series_factor(n);
      } else if (ch == '/') {
        ++pos_;
        acc = acc * series_factor(n).inverse();
      } else {
        return acc;
      }
    }
  }

  HSeries series_factor(int n) {
    HSeries base = series_base(n);
    skip();
    if (peek() == '^') {
      ++pos_;
      long long e = integer();
      return base.pow(e);
    }
    return base;
  }

  HSeries series_base(int n) {
    skip();
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      HSeries inner = series_expr(n);
      expect(')');
      return inner;
    }
    if (ch == 'H') {
      ++pos_;
      return hyperplane_power(n, HSeries::constant(n, 1));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      BigInt v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + (peek() - '0');
        ++pos_;
      }
      HSeries c = HSeries::constant(n, std::move(v));
      skip();
      if (peek() == 'H') {
        ++pos_;
        return hyperplane_power(n, c);
      }
      return c;
    }
    throw ParseError("expected series factor", pos_);
  }

  /// Multiplies the given coefficient by H or H^k.
  HSeries hyperplane_power(int n, const HSeries& coeff) {
    long long e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      e = integer();
      if (e < 0) throw ParseError("H cannot carry a negative power", pos_);
    }
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    if (e <= n) c[static_cast<std::size_t>(e)] = 1;
    return coeff * HSeries(n, std::move(c));
  }

  // --- tokens ---

  std::vector<BigInt> int_list() {
    expect('[');
    std::vector<BigInt> out;
    skip();
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(integer());
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  long long integer() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected integer", pos_);
    }
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (1ll << 40)) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string ident() {
    skip();
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += text_[pos_++];
    }
    if (out.empty()) throw ParseError("expected identifier", pos_);
    return out;
  }

  void expect(char ch) {
    skip();
    if (peek() != ch) {
      throw ParseError(std::string("expected '") + ch + "'", pos_);
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline CalcValue chow_calc(std::string_view text) {
  return ChowCalc(text).evaluate();
}

}  // namespace segre
