#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "secant/antiderivative.hpp"
#include "secant/rational_function.hpp"

namespace secant {

struct HermiteReduction {
  RationalFunction rational_part;  // g
  RationalFunction remainder;      // h, squarefree denominator; f = g' + h
};

/// Hermite reduction (quadratic variant): peels the derivative of a rational
/// function off f, leaving a remainder whose denominator is squarefree. The
/// remainder keeps any polynomial part of f.
HermiteReduction hermite_reduce(const RationalFunction& f);

struct PolyPart {
  Polynomial polynomial;
  friend bool operator==(const PolyPart&, const PolyPart&) = default;
};

/// residue / (var - root)^power
struct LinearPart {
  Rational residue;
  Rational root;
  int power = 1;
  friend bool operator==(const LinearPart&, const LinearPart&) = default;
};

/// numerator / quadratic^power, quadratic monic without rational roots.
struct QuadraticPart {
  Polynomial numerator;
  Polynomial quadratic;
  int power = 1;
  friend bool operator==(const QuadraticPart&, const QuadraticPart&) = default;
};

using PartialFractionTerm = std::variant<PolyPart, LinearPart, QuadraticPart>;

/// Decomposition of f over its rational linear factors and rational
/// quadratic factors. Expects a squarefree denominator (see hermite_reduce).
/// Throws Errc::UnsupportedDenominator when the denominator has an
/// irreducible factor of degree >= 3 or is not squarefree.
std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& f);

/// Sum of the parts as a single rational function in `variable`.
RationalFunction recombine(const std::vector<PartialFractionTerm>& parts, const std::string& variable);

/// Exact antiderivative over Q: polynomial part, Hermite rational part, ln
/// terms for linear and quadratic factors and atan terms for quadratics
/// whose completed-square constant is a rational square. Throws
/// Errc::UnsupportedDenominator or Errc::IrrationalAtanScale.
Antiderivative integrate_rational(const RationalFunction& f);

}  // namespace secant
