#include "secant/conics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "secant/error.hpp"

namespace secant {

RationalPoint RationalPoint::on(Conic conic, Rational x, Rational y) {
  const Rational lhs = conic == Conic::UnitCircle ? x * x + y * y : x * x - y * y;
  if (lhs != Rational(1)) {
    throw Error(Errc::InvalidArgument,
                "(" + x.to_string() + ", " + y.to_string() + ") is not on the " +
                    (conic == Conic::UnitCircle ? "unit circle" : "unit hyperbola"));
  }
  return RationalPoint(conic, std::move(x), std::move(y));
}

RationalPoint circle_from_B(const Rational& t) {
  const Rational t2 = t * t;
  const Rational d = Rational(1) + t2;
  return RationalPoint::on(Conic::UnitCircle, (Rational(1) - t2) / d, Rational(2) * t / d);
}

RationalPoint circle_from_D(const Rational& s) {
  const Rational s2 = s * s;
  const Rational d = s2 + Rational(1);
  return RationalPoint::on(Conic::UnitCircle, Rational(2) * s / d, (s2 - Rational(1)) / d);
}

RationalPoint hyperbola_from_Pplus(const Rational& u) {
  if (u.is_zero()) throw Error(Errc::ZeroParameter, "u = 0 has no point on the hyperbola");
  const Rational u2 = u * u;
  const Rational d = Rational(2) * u;
  return RationalPoint::on(Conic::UnitHyperbola, (u2 + Rational(1)) / d, (u2 - Rational(1)) / d);
}

PythagoreanTriple::PythagoreanTriple(BigInt a, BigInt b, BigInt c) {
  if (a <= 0 || b <= 0 || c <= 0 || a * a + b * b != c * c) {
    throw Error(Errc::InvalidArgument, "not a positive Pythagorean triple");
  }
  const BigInt g = gcd(gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a > b) std::swap(a, b);
  x_ = a;
  y_ = b;
  z_ = c;
}

PythagoreanTriple triple_from_parameter(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0 || abs(a) == abs(b)) {
    throw Error(Errc::DegenerateParameter, "t = a/b needs a != 0, b != 0 and |a| != |b|");
  }
  const BigInt x = abs(b * b - a * a);
  const BigInt y = abs(2 * a * b);
  const BigInt z = a * a + b * b;
  return PythagoreanTriple(x, y, z);
}

Rational parameter_from_triple(const PythagoreanTriple& triple, LegOrder order) {
  const BigInt& x = order == LegOrder::XY ? triple.x() : triple.y();
  const BigInt& y = order == LegOrder::XY ? triple.y() : triple.x();
  return Rational(y, x + triple.z());
}

std::vector<PythagoreanTriple> enumerate_primitive_triples(long max_z) {
  if (max_z < 1) throw Error(Errc::InvalidArgument, "max hypotenuse must be at least 1");
  std::vector<PythagoreanTriple> out;
  // Primitive triples are exactly (b^2 - a^2, 2ab, a^2 + b^2) with
  // 0 < a < b coprime and of opposite parity.
  for (long b = 2; b * b + 1 <= max_z; ++b) {
    for (long a = (b % 2 == 0) ? 1 : 2; a < b && a * a + b * b <= max_z; a += 2) {
      if (std::gcd(a, b) != 1) continue;
      out.emplace_back(BigInt(b * b - a * a), BigInt(2 * a * b), BigInt(a * a + b * b));
    }
  }
  std::sort(out.begin(), out.end(), [](const PythagoreanTriple& p, const PythagoreanTriple& q) {
    if (p.z() != q.z()) return p.z() < q.z();
    return p.x() < q.x();
  });
  return out;
}

namespace {

Rational to_s(const ConicParameter& p) {
  switch (p.kind) {
    case ParameterKind::S: return p.value;
    case ParameterKind::U: return p.value;
    case ParameterKind::V: return p.value * Rational(2);
    case ParameterKind::T:
      if (p.value == Rational(1)) {
        throw Error(Errc::PoleInConversion, "t = 1 (theta = pi/2) has no finite s");
      }
      return (Rational(1) + p.value) / (Rational(1) - p.value);
  }
  return {};
}

Rational from_s(const Rational& s, ParameterKind target) {
  switch (target) {
    case ParameterKind::S: return s;
    case ParameterKind::U: return s;
    case ParameterKind::V: return s / Rational(2);
    case ParameterKind::T:
      if (s == Rational(-1)) {
        throw Error(Errc::PoleInConversion, "s = -1 (theta = pi) has no finite t");
      }
      return (s - Rational(1)) / (s + Rational(1));
  }
  return {};
}

bool is_hyperbola_parameter(ParameterKind k) { return k == ParameterKind::U || k == ParameterKind::V; }

}  // namespace

ConicParameter param_convert(const ConicParameter& p, ParameterKind target) {
  if (is_hyperbola_parameter(p.kind) && p.value.is_zero()) {
    throw Error(Errc::PoleInConversion, "a zero hyperbola parameter has no image");
  }
  if (p.kind == target) return p;
  const Rational s = to_s(p);
  if (is_hyperbola_parameter(target) && s.is_zero()) {
    throw Error(Errc::PoleInConversion, "s = 0 corresponds to no point of the hyperbola");
  }
  return {target, from_s(s, target)};
}

double projection_coincidence_residual(double theta) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(theta > -half_pi && theta < half_pi) || std::abs(std::cos(theta)) < 1e-12) {
    throw Error(Errc::SingularPoint, "theta must lie in (-pi/2, pi/2)");
  }
  // tan(theta/2 + pi/4) by the addition formula; pi/4 itself is not representable
  const double a = std::tan(theta / 2);
  const double s = (1.0 + a) / (1.0 - a);
  return std::abs(s - (1.0 / std::cos(theta) + std::tan(theta)));
}

}  // namespace secant
