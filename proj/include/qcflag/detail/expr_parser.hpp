#pragma once

// Recursive-descent parser for the polynomial text format:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' | '/') factor)*      ('/' only by a rational constant)
//   factor := atom ['^' integer]
//   atom   := integer | identifier | '(' expr ')'
// The value type supplies ring operations, so the same grammar serves the
// commutative polynomials and the (noncommutative) operator algebra.

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "qcflag/poly.hpp"

namespace qcflag::detail {

template <class Value>
class ExprParser {
 public:
  using Resolver = std::function<Value(std::string_view)>;
  using FromRational = std::function<Value(const Rational&)>;
  using AsRational = std::function<std::optional<Rational>(const Value&)>;

  ExprParser(std::string_view text, Resolver resolve, FromRational constant, AsRational as_constant)
      : text_(text), resolve_(std::move(resolve)), constant_(std::move(constant)),
        as_constant_(std::move(as_constant)) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Value acc = term();
    if (negate) acc = constant_(Rational(-1)) * acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        Value d = factor();
        auto c = as_constant_(d);
        if (!c || *c == 0) fail("division by a non-constant or zero");
        acc = constant_(Rational(1) / *c) * acc;
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    Value base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Value r = constant_(Rational(1));
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant_(Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return resolve_(text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Resolver resolve_;
  FromRational constant_;
  AsRational as_constant_;
};

}  // namespace qcflag::detail
