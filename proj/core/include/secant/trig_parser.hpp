#pragma once

/**
 * @file trig_parser.hpp
 * @brief Recursive-descent front end for rational expressions in sin/cos.
 *
 * Grammar (whitespace insignificant, '-' may also be written U+2212):
 *
 *     expr   := term (('+' | '-') term)*
 *     term   := unary (('*' | '/') unary)*
 *     unary  := ('+' | '-') unary | power
 *     power  := base ('^' ['-'] integer)?
 *     base   := integer | 'x' | func '(' expr ')' | '(' expr ')'
 *     func   := sin | cos | tan | sec | csc | cot
 *
 * Rationals are written with '/', there are no floating literals, and the
 * argument of every function must be the variable x itself. A bare x is
 * accepted syntactically but rejected when converting to TrigRational,
 * since x is not a rational function of (cos x, sin x).
 */

#include <cstddef>
#include <memory>
#include <string_view>

#include "secant/rational.hpp"
#include "secant/trig_rational.hpp"

namespace secant {

enum class TrigFunction { Sin, Cos, Tan, Sec, Csc, Cot };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Variable, Call, Negate, Add, Subtract, Multiply, Divide, Power };

  Kind kind = Kind::Number;
  std::size_t position = 0;
  Rational number;                         // Number
  TrigFunction function = TrigFunction::Sin;  // Call
  int exponent = 0;                        // Power
  ExprPtr lhs;                             // unary operand, call argument, binary lhs
  ExprPtr rhs;
};

/// Throws Errc::SyntaxError with the offending byte offset.
ExprPtr parse_expression(std::string_view text);

/// Throws Errc::SyntaxError for misplaced x, Errc::DenominatorVanishesOnCircle
/// when a divisor is identically zero on the circle.
TrigRational to_trig_rational(const Expr& expr);

inline TrigRational parse_trig(std::string_view text) {
  return to_trig_rational(*parse_expression(text));
}

/// Direct double-precision evaluation of the tree, no canonicalization.
double evaluate(const Expr& expr, double x);

}  // namespace secant
