#include "secant/trig_parser.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "secant/error.hpp"

namespace secant {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError,
                "syntax error at offset " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Consumes '-' or U+2212 MINUS SIGN.
  bool accept_minus() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Kind kind, std::size_t at, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->position = at;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = node(Expr::Kind::Add, at, lhs, term());
      } else if (accept_minus()) {
        lhs = node(Expr::Kind::Subtract, at, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = node(Expr::Kind::Multiply, at, lhs, unary());
      } else if (accept('/')) {
        lhs = node(Expr::Kind::Divide, at, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept_minus()) return node(Expr::Kind::Negate, at, unary());
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr b = base();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return b;
    const bool negative = accept_minus();
    skip_space();
    const std::size_t digits_at = pos_;
    const BigInt n = integer();
    if (n > std::numeric_limits<int>::max()) {
      pos_ = digits_at;
      fail("exponent too large");
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Power;
    e->position = at;
    e->lhs = std::move(b);
    e->exponent = static_cast<int>(n.get_si()) * (negative ? -1 : 1);
    return e;
  }

  BigInt integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("floating-point literals are not supported; write rationals as p/q");
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  ExprPtr base() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->position = at;
      e->number = Rational(integer());
      return e;
    }
    if (ch == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string_view name = text_.substr(pos_, end - pos_);
      if (name == "x") {
        pos_ = end;
        return node(Expr::Kind::Variable, at);
      }
      TrigFunction f;
      if (name == "sin") f = TrigFunction::Sin;
      else if (name == "cos") f = TrigFunction::Cos;
      else if (name == "tan") f = TrigFunction::Tan;
      else if (name == "sec") f = TrigFunction::Sec;
      else if (name == "csc") f = TrigFunction::Csc;
      else if (name == "cot") f = TrigFunction::Cot;
      else fail("unknown identifier '" + std::string(name) + "'");
      pos_ = end;
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      ExprPtr arg = expr();
      if (!accept(')')) fail("expected ')'");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Call;
      e->position = at;
      e->function = f;
      e->lhs = std::move(arg);
      return e;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

TrigRational call_value(TrigFunction f) {
  switch (f) {
    case TrigFunction::Sin: return TrigRational::sin();
    case TrigFunction::Cos: return TrigRational::cos();
    case TrigFunction::Tan: return TrigRational::tan();
    case TrigFunction::Sec: return TrigRational::sec();
    case TrigFunction::Csc: return TrigRational::csc();
    case TrigFunction::Cot: return TrigRational::cot();
  }
  return {};
}

double call_value(TrigFunction f, double x) {
  switch (f) {
    case TrigFunction::Sin: return std::sin(x);
    case TrigFunction::Cos: return std::cos(x);
    case TrigFunction::Tan: return std::tan(x);
    case TrigFunction::Sec: return 1.0 / std::cos(x);
    case TrigFunction::Csc: return 1.0 / std::sin(x);
    case TrigFunction::Cot: return std::cos(x) / std::sin(x);
  }
  return 0.0;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

TrigRational to_trig_rational(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number;
    case Expr::Kind::Variable:
      throw Error(Errc::SyntaxError,
                  "x at offset " + std::to_string(e.position) +
                      " must appear as the argument of a trigonometric function",
                  e.position);
    case Expr::Kind::Call:
      if (e.lhs->kind != Expr::Kind::Variable) {
        throw Error(Errc::SyntaxError,
                    "argument at offset " + std::to_string(e.lhs->position) + " must be x",
                    e.lhs->position);
      }
      return call_value(e.function);
    case Expr::Kind::Negate:
      return -to_trig_rational(*e.lhs);
    case Expr::Kind::Add:
      return to_trig_rational(*e.lhs) + to_trig_rational(*e.rhs);
    case Expr::Kind::Subtract:
      return to_trig_rational(*e.lhs) - to_trig_rational(*e.rhs);
    case Expr::Kind::Multiply:
      return to_trig_rational(*e.lhs) * to_trig_rational(*e.rhs);
    case Expr::Kind::Divide:
      return to_trig_rational(*e.lhs) / to_trig_rational(*e.rhs);
    case Expr::Kind::Power:
      return pow(to_trig_rational(*e.lhs), e.exponent);
  }
  return {};
}

double evaluate(const Expr& e, double x) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.number.to_double();
    case Expr::Kind::Variable: return x;
    case Expr::Kind::Call: return call_value(e.function, evaluate(*e.lhs, x));
    case Expr::Kind::Negate: return -evaluate(*e.lhs, x);
    case Expr::Kind::Add: return evaluate(*e.lhs, x) + evaluate(*e.rhs, x);
    case Expr::Kind::Subtract: return evaluate(*e.lhs, x) - evaluate(*e.rhs, x);
    case Expr::Kind::Multiply: return evaluate(*e.lhs, x) * evaluate(*e.rhs, x);
    case Expr::Kind::Divide: return evaluate(*e.lhs, x) / evaluate(*e.rhs, x);
    case Expr::Kind::Power: return std::pow(evaluate(*e.lhs, x), e.exponent);
  }
  return 0.0;
}

}  // namespace secant
