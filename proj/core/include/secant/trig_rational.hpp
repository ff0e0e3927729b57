#pragma once

/**
 * @file trig_rational.hpp
 * @brief Rational functions of (cos x, sin x) in canonical form.
 *
 * With c = cos x and s = sin x every polynomial in (c, s) reduces modulo
 * s^2 = 1 - c^2 to A(c) + B(c) s. A quotient of two such elements is
 * rationalized by the conjugate A - B s, whose product with the original
 * is the s-free norm A^2 - B^2 (1 - c^2). The canonical form of a
 * TrigRational is therefore
 *
 *     (A(c) + B(c) s) / D(c),   D monic,   gcd(A, B, D) = 1,
 *
 * which is unique: if (A + B s)/D == (A' + B' s)/D' then A D' = A' D and
 * B D' = B' D, so D | D' gcd(A, B) and the gcd condition forces D | D'.
 * Equality of canonical values is component-wise equality.
 */

#include <string>

#include "secant/polynomial.hpp"

namespace secant {

/// A(c) + B(c) s in the coordinate ring of the unit circle.
class TrigPolynomial {
 public:
  TrigPolynomial() : TrigPolynomial(Polynomial({}, "c"), Polynomial({}, "c")) {}
  TrigPolynomial(Polynomial cos_part, Polynomial sin_part);
  TrigPolynomial(const Rational& c)  // NOLINT
      : TrigPolynomial(Polynomial::constant(c, "c"), Polynomial({}, "c")) {}

  static TrigPolynomial cos();
  static TrigPolynomial sin();

  const Polynomial& cos_part() const { return a_; }
  const Polynomial& sin_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  TrigPolynomial conjugate() const { return {a_, -b_}; }
  /// (A + B s)(A - B s) = A^2 - B^2 (1 - c^2), a polynomial in c.
  Polynomial norm() const;
  /// c -> -c
  TrigPolynomial reflect_cos() const { return {a_.reflect(), b_.reflect()}; }
  /// d/dx with c' = -s, s' = c.
  TrigPolynomial derivative() const;

  double operator()(double x) const;

  TrigPolynomial operator-() const { return {-a_, -b_}; }
  friend TrigPolynomial operator+(const TrigPolynomial& p, const TrigPolynomial& q) {
    return {p.a_ + q.a_, p.b_ + q.b_};
  }
  friend TrigPolynomial operator-(const TrigPolynomial& p, const TrigPolynomial& q) {
    return {p.a_ - q.a_, p.b_ - q.b_};
  }
  friend TrigPolynomial operator*(const TrigPolynomial& p, const TrigPolynomial& q);
  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  Polynomial a_;
  Polynomial b_;
};

class TrigRational {
 public:
  TrigRational() : TrigRational(Rational(0)) {}
  TrigRational(const Rational& c);                  // NOLINT
  TrigRational(const TrigPolynomial& p);            // NOLINT
  /// Canonicalizes num/den. Throws Errc::DenominatorVanishesOnCircle when den
  /// reduces to zero modulo s^2 + c^2 - 1.
  TrigRational(const TrigPolynomial& num, const TrigPolynomial& den);

  static TrigRational cos() { return TrigPolynomial::cos(); }
  static TrigRational sin() { return TrigPolynomial::sin(); }
  static TrigRational tan() { return sin() / cos(); }
  static TrigRational sec() { return TrigRational(1) / cos(); }
  static TrigRational csc() { return TrigRational(1) / sin(); }
  static TrigRational cot() { return cos() / sin(); }

  const TrigPolynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// c -> -c, canonicalized.
  TrigRational reflect_cos() const;
  TrigRational derivative() const;

  /// Value at x. Throws Errc::SingularPoint when |D(cos x)| < pole_threshold.
  double evaluate(double x, double pole_threshold = 1e-12) const;

  /// Deterministic text in sin(x)/cos(x), e.g. "(1+sin(x))/cos(x)".
  std::string to_string() const;

  TrigRational operator-() const;
  TrigRational& operator+=(const TrigRational& rhs);
  TrigRational& operator-=(const TrigRational& rhs);
  TrigRational& operator*=(const TrigRational& rhs);
  TrigRational& operator/=(const TrigRational& rhs);

  friend TrigRational operator+(TrigRational a, const TrigRational& b) { return a += b; }
  friend TrigRational operator-(TrigRational a, const TrigRational& b) { return a -= b; }
  friend TrigRational operator*(TrigRational a, const TrigRational& b) { return a *= b; }
  friend TrigRational operator/(TrigRational a, const TrigRational& b) { return a /= b; }
  friend bool operator==(const TrigRational&, const TrigRational&) = default;

 private:
  TrigPolynomial num_;
  Polynomial den_;
};

TrigRational pow(const TrigRational& r, int exponent);

/// Canonical form of num/den; see TrigRational(num, den).
TrigRational canonicalize(const TrigPolynomial& num, const TrigPolynomial& den);

/// d/dx using cos' = -sin and sin' = cos.
inline TrigRational trig_derivative(const TrigRational& r) { return r.derivative(); }

/// R(-c, s) == -R(c, s). Integrands with this parity are the ones the
/// u = sin x rewrite turns into rational functions of u.
bool is_odd_in_cos(const TrigRational& r);

/// u' == f u exactly, i.e. f = d/dx ln|u|. Throws Errc::InvalidArgument for u = 0.
bool verify_log_derivative(const TrigRational& f, const TrigRational& u);

inline double eval_trig(const TrigRational& r, double x) { return r.evaluate(x); }

}  // namespace secant
