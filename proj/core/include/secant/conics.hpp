#pragma once

/**
 * @file conics.hpp
 * @brief Rational points on the unit circle and the unit hyperbola.
 *
 * Three stereographic projections give rational parametrizations:
 *
 *   from B(-1, 0) onto the y-axis       t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))
 *   from D(0, 1) onto the x-axis        s -> (2s/(s^2+1), (s^2-1)/(s^2+1))
 *   hyperbola from [1:-1:0] onto x-axis u -> ((u^2+1)/(2u), (u^2-1)/(2u))
 *
 * Clearing denominators in the first one produces Pythagorean triples.
 */

#include <vector>

#include "secant/rational.hpp"

namespace secant {

enum class Conic { UnitCircle, UnitHyperbola };

/// Point on x^2 + y^2 = 1 or x^2 - y^2 = 1; the factory checks membership.
class RationalPoint {
 public:
  /// Throws Errc::InvalidArgument when (x, y) is not on the conic.
  static RationalPoint on(Conic conic, Rational x, Rational y);

  Conic conic() const { return conic_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  RationalPoint(Conic conic, Rational x, Rational y)
      : conic_(conic), x_(std::move(x)), y_(std::move(y)) {}

  Conic conic_;
  Rational x_;
  Rational y_;
};

RationalPoint circle_from_B(const Rational& t);
RationalPoint circle_from_D(const Rational& s);
/// Throws Errc::ZeroParameter for u = 0.
RationalPoint hyperbola_from_Pplus(const Rational& u);

/// X^2 + Y^2 = Z^2 in primitive form with X < Y.
class PythagoreanTriple {
 public:
  /// Normalizes any positive triple: divides by the gcd and sorts the legs.
  /// Throws Errc::InvalidArgument when the identity fails or an entry is <= 0.
  PythagoreanTriple(BigInt a, BigInt b, BigInt c);

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }
  const BigInt& z() const { return z_; }

  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;

 private:
  BigInt x_;
  BigInt y_;
  BigInt z_;
};

/// From t = a/b: (b^2 - a^2, 2ab, a^2 + b^2) up to sign, reduced and sorted.
/// Throws Errc::DegenerateParameter when a = 0, b = 0 or |a| = |b|.
PythagoreanTriple triple_from_parameter(const BigInt& a, const BigInt& b);

enum class LegOrder { XY, YX };

/// t = Y / (X + Z) for the chosen leg order; circle_from_B(t) is (X/Z, Y/Z).
Rational parameter_from_triple(const PythagoreanTriple& triple, LegOrder order);

/// Every primitive triple with Z <= max_z, ordered by Z then by the smaller leg.
std::vector<PythagoreanTriple> enumerate_primitive_triples(long max_z);

/// t = tan(x/2), s = tan(x/2 + pi/4), u = sec x + tan x, v = u / 2.
enum class ParameterKind { T, S, U, V };

struct ConicParameter {
  ParameterKind kind;
  Rational value;
  friend bool operator==(const ConicParameter&, const ConicParameter&) = default;
};

/// s = u, v = u / 2, s = (1 + t)/(1 - t), t = (s - 1)/(s + 1).
/// Throws Errc::PoleInConversion for t = 1 -> s, s = -1 -> t, and for a
/// zero hyperbola parameter (u or v) on either side.
ConicParameter param_convert(const ConicParameter& p, ParameterKind target);

/// |tan(theta/2 + pi/4) - (sec theta + tan theta)|. Throws Errc::SingularPoint
/// outside (-pi/2, pi/2) or where cos theta vanishes numerically.
double projection_coincidence_residual(double theta);

}  // namespace secant
