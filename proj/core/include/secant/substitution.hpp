#pragma once

/**
 * @file substitution.hpp
 * @brief The four secant substitutions as rational parametrizations.
 *
 *   Weierstrass          t = tan(x/2)          circle projected from (-1, 0)
 *   ModifiedWeierstrass  s = tan(x/2 + pi/4)   circle projected from (0, 1)
 *   Gregory              u = sec x + tan x     hyperbola x^2 - y^2 = 1 projected
 *                                              from its point at infinity [1:-1:0]
 *   Barrow               u = sin x             structural rewrite R dx = (R / cos x) du
 *
 * Gregory and ModifiedWeierstrass share the same maps (s = sec x + tan x);
 * they are kept as separate substitutions with their own parameter names.
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "secant/antiderivative.hpp"
#include "secant/rational_function.hpp"
#include "secant/trig_rational.hpp"

namespace secant {

enum class SubstitutionName { Gregory, Barrow, Weierstrass, ModifiedWeierstrass };

std::string_view to_string(SubstitutionName name);

struct Substitution {
  SubstitutionName name;
  std::string parameter;
  /// cos x, sin x and dx/dparameter as functions of the parameter. Barrow has
  /// no rational cos or dx; only sin_expr = u is set.
  std::optional<RationalFunction> cos_expr;
  RationalFunction sin_expr;
  std::optional<RationalFunction> dx_expr;
  /// The parameter as a function of x, canonical and as display text.
  TrigRational back_sub;
  std::string back_sub_text;
  /// Open interval of x on which the parametrization is regular.
  double valid_lo;
  double valid_hi;
};

struct SubstitutionResult {
  RationalFunction integrand;
  SubstitutionName substitution;
};

/// Gregory, Barrow, Weierstrass, ModifiedWeierstrass in that order.
const std::array<Substitution, 4>& builtin_substitutions();
const Substitution& substitution(SubstitutionName name);

/// R(cos, sin) dx rewritten as integrand(param) d(param).
/// Throws Errc::NotApplicable for Barrow on an integrand that is not odd in
/// cos x, Errc::DenominatorVanishesIdentically if the composition degenerates.
SubstitutionResult apply_substitution(const TrigRational& r, const Substitution& sub);

/// Replaces the parameter of every term by sub.back_sub. Arguments are only
/// canonicalized, never simplified further.
TrigAntiderivative back_substitute(const Antiderivative& f, const Substitution& sub);

}  // namespace secant
