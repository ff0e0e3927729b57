#include "secant/trig_rational.hpp"

#include <cmath>

#include "secant/error.hpp"

namespace secant {

namespace {

const Polynomial& one_minus_c2() {
  static const Polynomial p({Rational(1), Rational(0), Rational(-1)}, "c");
  return p;
}

std::string sin_term(const Polynomial& b) {
  if (b.degree() == 0) {
    const Rational& k = b.leading();
    if (k.is_one()) return "sin(x)";
    if ((-k).is_one()) return "-sin(x)";
    return k.to_string() + "*sin(x)";
  }
  int nonzero = 0;
  for (const auto& c : b.coefficients()) nonzero += c.is_zero() ? 0 : 1;
  const std::string text = render(b, "cos(x)");
  if (nonzero == 1) return text + "*sin(x)";
  return "(" + text + ")*sin(x)";
}

}  // namespace

TrigPolynomial::TrigPolynomial(Polynomial cos_part, Polynomial sin_part)
    : a_(cos_part.with_variable("c")), b_(sin_part.with_variable("c")) {}

TrigPolynomial TrigPolynomial::cos() {
  return {Polynomial::identity("c"), Polynomial({}, "c")};
}

TrigPolynomial TrigPolynomial::sin() {
  return {Polynomial({}, "c"), Polynomial::constant(1, "c")};
}

Polynomial TrigPolynomial::norm() const { return a_ * a_ - b_ * b_ * one_minus_c2(); }

TrigPolynomial TrigPolynomial::derivative() const {
  const Polynomial c = Polynomial::identity("c");
  return {-(b_.derivative() * one_minus_c2()) + b_ * c, -a_.derivative()};
}

double TrigPolynomial::operator()(double x) const {
  return a_(std::cos(x)) + b_(std::cos(x)) * std::sin(x);
}

TrigPolynomial operator*(const TrigPolynomial& p, const TrigPolynomial& q) {
  return {p.a_ * q.a_ + p.b_ * q.b_ * one_minus_c2(), p.a_ * q.b_ + q.a_ * p.b_};
}

TrigRational canonicalize(const TrigPolynomial& num, const TrigPolynomial& den) {
  return TrigRational(num, den);
}

TrigRational::TrigRational(const Rational& c)
    : num_(c), den_(Polynomial::constant(1, "c")) {}

TrigRational::TrigRational(const TrigPolynomial& p)
    : num_(p), den_(Polynomial::constant(1, "c")) {}

TrigRational::TrigRational(const TrigPolynomial& num, const TrigPolynomial& den) {
  TrigPolynomial n = num;
  Polynomial d;
  if (den.sin_part().is_zero()) {
    d = den.cos_part();
  } else {
    n = n * den.conjugate();
    d = den.norm();
  }
  if (d.is_zero()) {
    throw Error(Errc::DenominatorVanishesOnCircle,
                "denominator vanishes identically on the unit circle");
  }
  if (n.is_zero()) {
    num_ = TrigPolynomial();
    den_ = Polynomial::constant(1, "c");
    return;
  }
  const Polynomial g = gcd(gcd(n.cos_part(), n.sin_part()), d);
  Polynomial a = exact_quotient(n.cos_part(), g);
  Polynomial b = exact_quotient(n.sin_part(), g);
  d = exact_quotient(d, g);
  const Rational lc = d.leading();
  num_ = TrigPolynomial(a / lc, b / lc);
  den_ = (d / lc).with_variable("c");
}

TrigRational TrigRational::reflect_cos() const {
  return TrigRational(num_.reflect_cos(), TrigPolynomial(den_.reflect(), Polynomial({}, "c")));
}

TrigRational TrigRational::derivative() const {
  const TrigPolynomial d(den_, Polynomial({}, "c"));
  return TrigRational(num_.derivative() * d - num_ * d.derivative(), d * d);
}

double TrigRational::evaluate(double x, double pole_threshold) const {
  const double d = den_(std::cos(x));
  if (!(std::abs(d) >= pole_threshold) || d == 0.0) {
    throw Error(Errc::SingularPoint, "denominator vanishes at x = " + std::to_string(x));
  }
  return num_(x) / d;
}

std::string TrigRational::to_string() const {
  std::string num;
  if (!num_.cos_part().is_zero()) num = render(num_.cos_part(), "cos(x)");
  if (!num_.sin_part().is_zero()) {
    const std::string s = sin_term(num_.sin_part());
    if (!num.empty() && s.front() != '-') num += "+";
    num += s;
  }
  if (num.empty()) num = "0";
  if (den_.degree() == 0) return num;
  const std::string den = render(den_, "cos(x)");
  return (is_composite(num) ? "(" + num + ")" : num) + "/" +
         (is_composite(den) ? "(" + den + ")" : den);
}

TrigRational TrigRational::operator-() const {
  TrigRational r = *this;
  r.num_ = -num_;
  return r;
}

TrigRational& TrigRational::operator+=(const TrigRational& rhs) {
  const TrigPolynomial d1(den_, Polynomial({}, "c"));
  const TrigPolynomial d2(rhs.den_, Polynomial({}, "c"));
  *this = TrigRational(num_ * d2 + rhs.num_ * d1, d1 * d2);
  return *this;
}

TrigRational& TrigRational::operator-=(const TrigRational& rhs) { return *this += -rhs; }

TrigRational& TrigRational::operator*=(const TrigRational& rhs) {
  const TrigPolynomial d(den_ * rhs.den_, Polynomial({}, "c"));
  *this = TrigRational(num_ * rhs.num_, d);
  return *this;
}

TrigRational& TrigRational::operator/=(const TrigRational& rhs) {
  if (rhs.is_zero()) {
    throw Error(Errc::DenominatorVanishesOnCircle,
                "denominator vanishes identically on the unit circle");
  }
  const TrigPolynomial d1(den_, Polynomial({}, "c"));
  const TrigPolynomial d2(rhs.den_, Polynomial({}, "c"));
  *this = TrigRational(num_ * d2, d1 * rhs.num_);
  return *this;
}

TrigRational pow(const TrigRational& r, int exponent) {
  if (exponent < 0) return TrigRational(1) / pow(r, -exponent);
  TrigRational result(1);
  TrigRational base = r;
  auto e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool is_odd_in_cos(const TrigRational& r) { return r.reflect_cos() == -r; }

bool verify_log_derivative(const TrigRational& f, const TrigRational& u) {
  if (u.is_zero()) throw Error(Errc::InvalidArgument, "log-derivative of zero");
  return u.derivative() == f * u;
}

}  // namespace secant
