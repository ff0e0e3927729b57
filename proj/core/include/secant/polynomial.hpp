#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "secant/rational.hpp"

namespace secant {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coefficients()[i] is the coefficient of var^i and the highest stored
/// coefficient is never zero, so the zero polynomial has no coefficients and
/// degree kZeroDegree. The variable tag is only significant for nonconstant
/// polynomials: constants combine freely with any variable, two nonconstant
/// polynomials in different variables do not.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients, std::string variable = "x");

  static Polynomial constant(const Rational& c, std::string variable = "x");
  static Polynomial monomial(const Rational& c, int degree, std::string variable = "x");
  static Polynomial identity(std::string variable = "x");

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero for indices beyond the degree.
  const Rational& coefficient(int i) const;
  const Rational& leading() const;
  const std::string& variable() const { return var_; }
  Polynomial with_variable(std::string variable) const;

  Rational operator()(const Rational& at) const;
  double operator()(double at) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial integral() const;
  Polynomial monic() const;
  /// Positive rational c such that p / c has coprime integer coefficients.
  Rational content() const;
  Polynomial primitive_part() const { return *this / content(); }
  /// p(-var)
  Polynomial reflect() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);
  Polynomial& operator/=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend Polynomial operator*(const Rational& a, Polynomial b) { return b *= a; }
  friend Polynomial operator/(Polynomial a, const Rational& b) { return a /= b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::string merged_variable(const Polynomial& other) const;

  std::vector<Rational> coeffs_;
  std::string var_ = "x";
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);
/// Exact division; throws std::logic_error if the remainder is nonzero.
Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct ExtendedGcd {
  Polynomial s;
  Polynomial t;
  Polynomial gcd;  // monic, s*a + t*b == gcd
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Solves s*a + t*b == c with deg s < deg b, assuming gcd(a, b) divides c.
std::pair<Polynomial, Polynomial> solve_bezout(const Polynomial& a, const Polynomial& b,
                                               const Polynomial& c);

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, nonconstant
  int multiplicity;
};

struct SquarefreeFactorization {
  Rational leading;
  std::vector<SquarefreeFactor> factors;  // ascending multiplicity

  Polynomial expand() const;
};

/// Yun's algorithm. Throws Errc::ZeroPolynomial on zero input.
SquarefreeFactorization squarefree_factorization(const Polynomial& p);

/// All rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Ascending-degree rendering with `var_text` substituted for the variable,
/// e.g. "1-2*sin(x)+sin(x)^2". Composite var texts are parenthesized where
/// needed.
std::string render(const Polynomial& p, std::string_view var_text);
inline std::string render(const Polynomial& p) { return render(p, p.variable()); }

/// True when `text` has a top-level + - * or / and needs grouping.
bool is_composite(std::string_view text);

/// Horner evaluation of p at a value in any ring with Rational scaling.
template <class Ring>
Ring horner(const Polynomial& p, const Ring& at, const Ring& zero) {
  Ring acc = zero;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * at + Ring(*it);
  }
  return acc;
}

}  // namespace secant
