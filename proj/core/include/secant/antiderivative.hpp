#pragma once

#include <string>
#include <vector>

#include "secant/rational_function.hpp"
#include "secant/trig_rational.hpp"

namespace secant {

enum class TermKind { Polynomial, Rational, Log, Atan };

/// One summand of an antiderivative:
///   Polynomial / Rational : argument
///   Log                   : coefficient * ln|argument|  (or ln(argument) when !absolute)
///   Atan                  : coefficient * atan(argument)
template <class Body>
struct Term {
  TermKind kind = TermKind::Polynomial;
  Rational coefficient{1};
  Body argument;
  bool absolute = false;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of terms; the integration constant is implicit.
template <class Body>
struct BasicAntiderivative {
  std::string variable;
  std::vector<Term<Body>> terms;

  friend bool operator==(const BasicAntiderivative&, const BasicAntiderivative&) = default;
};

/// Univariate result of integrating a RationalFunction.
using Antiderivative = BasicAntiderivative<RationalFunction>;

/// A term body after back-substitution: the univariate `source` with its
/// parameter replaced by the trigonometric expression `parameter_text`,
/// together with the canonical value of that composition.
struct TrigArgument {
  RationalFunction source;
  std::string parameter_text;
  TrigRational value;

  friend bool operator==(const TrigArgument&, const TrigArgument&) = default;
};

/// Antiderivative in x.
using TrigAntiderivative = BasicAntiderivative<TrigArgument>;

/// Termwise symbolic derivative (chain rule for ln and atan).
RationalFunction derivative(const Antiderivative& f);
TrigRational derivative(const TrigAntiderivative& f);

/// Numeric value. Throws Errc::SingularPoint when a denominator or a log
/// argument is smaller than `pole_threshold` in magnitude.
double evaluate(const Antiderivative& f, double at, double pole_threshold = 1e-12);
double evaluate(const TrigAntiderivative& f, double x, double pole_threshold = 1e-12);

}  // namespace secant
