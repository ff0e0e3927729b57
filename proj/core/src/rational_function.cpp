#include "secant/rational_function.hpp"

#include <cmath>

#include "secant/error.hpp"

namespace secant {

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::constant(1, num_.variable())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  const std::string var = num.is_constant() ? den.variable() : num.variable();
  if (num.is_zero()) {
    num_ = Polynomial({}, var);
    den_ = Polynomial::constant(1, var);
    return;
  }
  const Polynomial g = gcd(num, den);
  num = exact_quotient(num, g);
  den = exact_quotient(den, g);
  const Rational lc = den.leading();
  num_ = (num / lc).with_variable(var);
  den_ = (den / lc).with_variable(var);
}

const std::string& RationalFunction::variable() const {
  return num_.is_constant() ? den_.variable() : num_.variable();
}

RationalFunction RationalFunction::with_variable(std::string variable) const {
  RationalFunction f = *this;
  f.num_ = num_.with_variable(variable);
  f.den_ = den_.with_variable(std::move(variable));
  return f;
}

Rational RationalFunction::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d.is_zero()) throw Error(Errc::SingularPoint, "rational function evaluated at a pole");
  return num_(at) / d;
}

double RationalFunction::evaluate(double at, double pole_threshold) const {
  const double d = den_(at);
  if (!(std::abs(d) >= pole_threshold) || d == 0.0) {
    throw Error(Errc::SingularPoint, "rational function evaluated at a pole");
  }
  return num_(at) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -num_;
  return f;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw Error(Errc::ZeroDenominator, "rational function division by zero");
  *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

RationalFunction pow(const RationalFunction& f, int exponent) {
  if (exponent < 0) return RationalFunction(1) / pow(f, -exponent);
  return RationalFunction(pow(f.numerator(), static_cast<unsigned>(exponent)),
                          pow(f.denominator(), static_cast<unsigned>(exponent)));
}

RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner) {
  const RationalFunction zero;
  const RationalFunction num = horner(outer.numerator(), inner, zero);
  const RationalFunction den = horner(outer.denominator(), inner, zero);
  if (den.is_zero()) {
    throw Error(Errc::DenominatorVanishesIdentically, "composition has an identically zero denominator");
  }
  return num / den;
}

std::string render(const RationalFunction& f, std::string_view var_text) {
  const std::string num = render(f.numerator(), var_text);
  if (f.is_polynomial()) return num;
  const std::string den = render(f.denominator(), var_text);
  const std::string lhs = is_composite(num) ? "(" + num + ")" : num;
  const std::string rhs = is_composite(den) ? "(" + den + ")" : den;
  return lhs + "/" + rhs;
}

}  // namespace secant
