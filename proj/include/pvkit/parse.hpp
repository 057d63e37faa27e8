#pragma once

// Recursive-descent parser for rational function expressions over Q(zeta_N).
// Grammar: integers, `x`, `zeta`, binary + - * /, `^` with nonnegative integer
// exponents, parentheses, unary minus; whitespace is insignificant.

#include <cctype>

#include "pvkit/ratfunc.hpp"

namespace pvkit {

namespace detail {

class ExprParser {
public:
  ExprParser(const std::string& src, long level) : src_(src), level_(level) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return v;
  }

private:
  const std::string& src_;
  long level_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    skip_ws();
    if (!eat('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("exponent must be a nonnegative integer", at);
    long e = integer_literal();
    if (e > 10000) throw ParseError("exponent too large", at);
    return base.pow(e);
  }

  long integer_literal() {
    std::size_t start = pos_;
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits.push_back(src_[pos_++]);
    if (digits.empty()) throw ParseError("expected integer", start);
    if (digits.size() > 9)
      throw ParseError("integer literal too large", start);
    return std::stol(digits);
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(integer_literal());
    if (src_.compare(pos_, 4, "zeta") == 0) {
      pos_ += 4;
      return RatFunc(CycloNum::zeta(level_));
    }
    if (c == 'x') {
      ++pos_;
      return RatFunc::x();
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }
};

}  // namespace detail

// Parses an expression at the given cyclotomic level (zeta = zeta_level).
inline RatFunc parse(const std::string& text, long level = 1) {
  return detail::ExprParser(text, level).parse();
}

}  // namespace pvkit
