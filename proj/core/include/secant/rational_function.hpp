#pragma once

#include <string>

#include "secant/polynomial.hpp"

namespace secant {

/// Quotient of polynomials in canonical form: numerator and denominator
/// coprime, denominator monic, zero stored as 0/1. Equality is structural.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(Polynomial(), Polynomial::constant(1)) {}
  RationalFunction(const Rational& c) : RationalFunction(Polynomial::constant(c)) {}  // NOLINT
  RationalFunction(Polynomial p);  // NOLINT: polynomials embed implicitly
  /// Cancels the gcd and rescales to a monic denominator.
  /// Throws Errc::ZeroDenominator when `den` is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const std::string& variable() const;
  RationalFunction with_variable(std::string variable) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  Rational operator()(const Rational& at) const;
  /// Throws Errc::SingularPoint when |den(at)| < pole_threshold.
  double evaluate(double at, double pole_threshold = 0.0) const;

  RationalFunction derivative() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& f, int exponent);

/// Substitutes `inner` for the variable of `outer`.
RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner);

/// "num" for polynomials, "(num)/(den)" otherwise (parentheses only when needed).
std::string render(const RationalFunction& f, std::string_view var_text);
inline std::string render(const RationalFunction& f) { return render(f, f.variable()); }

}  // namespace secant
