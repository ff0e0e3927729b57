#include "secant/antiderivative.hpp"

#include <cmath>

#include "secant/error.hpp"

namespace secant {

namespace {

template <class Value>
Value term_derivative(TermKind kind, const Rational& coefficient, const Value& g) {
  switch (kind) {
    case TermKind::Polynomial:
    case TermKind::Rational:
      return Value(coefficient) * g.derivative();
    case TermKind::Log:
      return Value(coefficient) * g.derivative() / g;
    case TermKind::Atan:
      return Value(coefficient) * g.derivative() / (Value(1) + g * g);
  }
  return Value();
}

double term_value(TermKind kind, const Rational& coefficient, double g, bool absolute,
                  double pole_threshold) {
  const double k = coefficient.to_double();
  switch (kind) {
    case TermKind::Polynomial:
    case TermKind::Rational:
      return k * g;
    case TermKind::Log:
      if (!(std::abs(g) >= pole_threshold) || g == 0.0 || (!absolute && g < 0.0)) {
        throw Error(Errc::SingularPoint, "logarithm of a vanishing argument");
      }
      return k * std::log(std::abs(g));
    case TermKind::Atan:
      return k * std::atan(g);
  }
  return 0.0;
}

}  // namespace

RationalFunction derivative(const Antiderivative& f) {
  RationalFunction sum = RationalFunction(Polynomial({}, f.variable));
  for (const auto& t : f.terms) sum += term_derivative(t.kind, t.coefficient, t.argument);
  return sum;
}

TrigRational derivative(const TrigAntiderivative& f) {
  TrigRational sum;
  for (const auto& t : f.terms) sum += term_derivative(t.kind, t.coefficient, t.argument.value);
  return sum;
}

double evaluate(const Antiderivative& f, double at, double pole_threshold) {
  double sum = 0.0;
  for (const auto& t : f.terms) {
    sum += term_value(t.kind, t.coefficient, t.argument.evaluate(at, pole_threshold), t.absolute,
                      pole_threshold);
  }
  return sum;
}

double evaluate(const TrigAntiderivative& f, double x, double pole_threshold) {
  double sum = 0.0;
  for (const auto& t : f.terms) {
    sum += term_value(t.kind, t.coefficient, t.argument.value.evaluate(x, pole_threshold),
                      t.absolute, pole_threshold);
  }
  return sum;
}

}  // namespace secant
