#include "secant/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "secant/error.hpp"

namespace secant {

namespace {

const Rational& zero_rational() {
  static const Rational zero;
  return zero;
}

// Positive divisors of |n|, n != 0, by trial division.
std::vector<BigInt> divisors(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> primes;
  bool prime = mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
  for (BigInt p = 2; !prime && p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      primes.emplace_back(p, e);
      prime = mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
    }
  }
  if (n > 1) primes.emplace_back(n, 1);

  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [p, e] : primes) {
    const std::size_t count = out.size();
    BigInt power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients, std::string variable)
    : coeffs_(std::move(coefficients)), var_(std::move(variable)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c, std::string variable) {
  return Polynomial({c}, std::move(variable));
}

Polynomial Polynomial::monomial(const Rational& c, int degree, std::string variable) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs), std::move(variable));
}

Polynomial Polynomial::identity(std::string variable) {
  return monomial(Rational(1), 1, std::move(variable));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Polynomial::merged_variable(const Polynomial& other) const {
  if (is_constant()) return other.var_;
  if (!other.is_constant() && other.var_ != var_) {
    throw std::invalid_argument("polynomials in different variables: " + var_ + ", " + other.var_);
  }
  return var_;
}

const Rational& Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

Polynomial Polynomial::with_variable(std::string variable) const {
  Polynomial p = *this;
  p.var_ = std::move(variable);
  return p;
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double Polynomial::operator()(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->to_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return Polynomial(std::move(out), var_);
}

Polynomial Polynomial::integral() const {
  if (is_zero()) return *this;
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return Polynomial(std::move(out), var_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

Rational Polynomial::content() const {
  if (is_zero()) return Rational(1);
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    num_gcd = gcd(num_gcd, c.numerator());
    den_lcm = lcm(den_lcm, c.denominator());
  }
  return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::reflect() const {
  Polynomial p = *this;
  for (std::size_t i = 1; i < p.coeffs_.size(); i += 2) p.coeffs_[i] = -p.coeffs_[i];
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  var_ = merged_variable(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  var_ = merged_variable(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  var_ = merged_variable(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& rhs) {
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.is_constant() || a.var_ == b.var_;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(Rational(1), p.variable());
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(Errc::ZeroDenominator, "polynomial division by zero");
  const std::string var = dividend.is_constant() ? divisor.variable() : dividend.variable();
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) {
    return {Polynomial({}, var), dividend.with_variable(var)};
  }
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Rational lead_inv = divisor.leading().inverse();
  const auto& dc = divisor.coefficients();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot), var), Polynomial(std::move(rem), var)};
}

Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const std::string var = a.is_constant() ? b.variable() : a.variable();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1, var), s1({}, var);
  Polynomial t0({}, var), t1 = Polynomial::constant(1, var);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  const Rational lc = r0.leading();
  return {s0 / lc, t0 / lc, r0 / lc};
}

std::pair<Polynomial, Polynomial> solve_bezout(const Polynomial& a, const Polynomial& b,
                                               const Polynomial& c) {
  const ExtendedGcd e = extended_gcd(a, b);
  auto [q, r] = divmod(c, e.gcd);
  if (!r.is_zero()) throw std::logic_error("solve_bezout: gcd does not divide right-hand side");
  Polynomial s = e.s * q;
  Polynomial t = e.t * q;
  if (!b.is_zero()) {
    auto [qs, rs] = divmod(s, b);
    s = rs;
    t = t + qs * a;
  }
  return {s, t};
}

Polynomial SquarefreeFactorization::expand() const {
  std::string var = "x";
  if (!factors.empty()) var = factors.front().factor.variable();
  Polynomial out = Polynomial::constant(leading, var);
  for (const auto& f : factors) out *= pow(f.factor, static_cast<unsigned>(f.multiplicity));
  return out;
}

SquarefreeFactorization squarefree_factorization(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree factorization of zero");
  SquarefreeFactorization out{p.leading(), {}};
  if (p.is_constant()) return out;

  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  const Polynomial b = gcd(f, df);
  Polynomial c = exact_quotient(f, b);
  Polynomial d = exact_quotient(df, b) - c.derivative();
  for (int i = 1; !c.is_constant(); ++i) {
    const Polynomial a = gcd(c, d);
    if (!a.is_constant()) out.factors.push_back({a, i});
    c = exact_quotient(c, a);
    d = exact_quotient(d, a) - c.derivative();
  }
  return out;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "rational roots of zero");
  std::vector<Rational> roots;
  Polynomial work = p.primitive_part();

  int zeros = 0;
  while (zeros <= work.degree() && work.coefficient(zeros).is_zero()) ++zeros;
  for (int i = 0; i < zeros; ++i) roots.emplace_back(0);
  if (zeros > 0) {
    std::vector<Rational> shifted(work.coefficients().begin() + zeros, work.coefficients().end());
    work = Polynomial(std::move(shifted), work.variable());
  }

  if (work.degree() >= 1) {
    // Candidates p/q with p | a0 and q | an; numerators and denominators of
    // the primitive integer polynomial.
    const auto nums = divisors(work.coefficient(0).numerator());
    const auto dens = divisors(work.leading().numerator());
    for (const auto& q : dens) {
      for (const auto& n : nums) {
        if (gcd(n, q) != 1) continue;
        for (const BigInt& signed_n : {BigInt(n), BigInt(-n)}) {
          const Rational r(signed_n, q);
          while (work.degree() >= 1 && work(r).is_zero()) {
            roots.push_back(r);
            work = exact_quotient(work, Polynomial({-r, Rational(1)}, work.variable()));
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_composite(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(' || ch == '|') {
      // '|' only appears as ln|..| pairs; treat like a bracket for grouping.
      if (ch == '|') {
        const auto close = text.find('|', i + 1);
        if (close != std::string_view::npos) {
          i = close;
          continue;
        }
      }
      ++depth;
    } else if (ch == ')') {
      --depth;
    } else if (depth == 0 && (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '^')) {
      return true;
    }
  }
  return false;
}

std::string render(const Polynomial& p, std::string_view var_text) {
  if (p.is_zero()) return "0";
  const bool composite = is_composite(var_text);
  std::string out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coefficient(k);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    const bool show_coeff = !mag.is_one();
    if (show_coeff) out += mag.to_string() + "*";
    const bool group = composite && (k > 1 || show_coeff || negative);
    if (group) {
      out += "(";
      out += var_text;
      out += ")";
    } else {
      out += var_text;
    }
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace secant
