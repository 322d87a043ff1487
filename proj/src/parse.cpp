#include "rct/parse.hpp"

#include <cctype>

namespace rct {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SparsePoly run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    auto p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expr() {
    auto acc = term();
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

  SparsePoly term() {
    auto acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else {
        skip_space();
        std::size_t at = pos_;
        if (!accept('/')) return acc;
        auto divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero())
          throw ParseError("division is only defined by nonzero constants", at);
        acc = Rational(1 / divisor.constant_term()) * acc;
      }
    }
  }

  SparsePoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  SparsePoly power() {
    auto base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected a non-negative integer exponent", start);
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  SparsePoly primary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)), 10);
      return SparsePoly::constant(Rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return SparsePoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace rct
