#include "secant/rational_integration.hpp"

#include <algorithm>

#include "secant/error.hpp"

namespace secant {

namespace {

std::vector<BigInt> signed_divisors(const BigInt& n) {
  std::vector<BigInt> out;
  const BigInt m = abs(n);
  for (BigInt d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    for (const BigInt& v : {BigInt(d), BigInt(m / d)}) {
      out.push_back(v);
      out.push_back(-v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A rational quadratic factor of p (Kronecker-style search over the
// primitive integer form), or the zero polynomial when there is none.
// Assumes p has no rational roots, so p(1) and p(-1) are nonzero.
Polynomial find_quadratic_factor(const Polynomial& p) {
  Polynomial z = p.primitive_part();
  if (z.leading().sign() < 0) z = -z;
  const BigInt lead = z.leading().numerator();
  const BigInt tail = z.coefficient(0).numerator();
  const BigInt at_one = z(Rational(1)).numerator();
  const BigInt at_minus_one = z(Rational(-1)).numerator();
  for (const BigInt& a : signed_divisors(lead)) {
    if (a <= 0) continue;
    for (const BigInt& c : signed_divisors(tail)) {
      for (const BigInt& d : signed_divisors(at_one)) {
        const BigInt b = d - a - c;
        const BigInt g_at_minus_one = a - b + c;
        if (g_at_minus_one == 0 || at_minus_one % g_at_minus_one != 0) continue;
        const Polynomial g({Rational(c), Rational(b), Rational(a)}, p.variable());
        if (divmod(z, g).second.is_zero()) return g.monic();
      }
    }
  }
  return Polynomial({}, p.variable());
}

std::vector<Polynomial> split_into_quadratics(Polynomial cofactor) {
  std::vector<Polynomial> out;
  while (cofactor.degree() > 2) {
    if (cofactor.degree() % 2 != 0) break;
    const Polynomial g = find_quadratic_factor(cofactor);
    if (g.is_zero()) break;
    out.push_back(g);
    cofactor = exact_quotient(cofactor, g);
  }
  if (cofactor.degree() > 2) {
    throw Error(Errc::UnsupportedDenominator,
                "denominator factor " + render(cofactor) +
                    " has no rational roots and does not split into rational quadratics");
  }
  if (cofactor.degree() == 2) out.push_back(cofactor.monic());
  return out;
}

// Linear log arguments are oriented so the constant term is positive
// (1 - u rather than u - 1); the variable itself stays monic.
Polynomial oriented_linear(const Rational& root, const std::string& var) {
  if (root.sign() > 0) return Polynomial({root, Rational(-1)}, var);
  return Polynomial({-root, Rational(1)}, var);
}

// Lower degree first; then larger coefficients from the constant term up.
bool argument_before(const RationalFunction& a, const RationalFunction& b) {
  const Polynomial& pa = a.numerator();
  const Polynomial& pb = b.numerator();
  if (pa.degree() != pb.degree()) return pa.degree() < pb.degree();
  for (int i = 0; i <= pa.degree(); ++i) {
    if (pa.coefficient(i) != pb.coefficient(i)) return pa.coefficient(i) > pb.coefficient(i);
  }
  return false;
}

}  // namespace

HermiteReduction hermite_reduce(const RationalFunction& f) {
  const std::string var = f.variable();
  Polynomial a = f.numerator();
  Polynomial d = f.denominator();
  RationalFunction g = RationalFunction(Polynomial({}, var));
  if (f.is_zero() || d.is_constant()) return {g, f};

  const SquarefreeFactorization sqf = squarefree_factorization(d);
  for (const auto& [v, i] : sqf.factors) {
    if (i < 2) continue;
    const Polynomial u = exact_quotient(d, pow(v, static_cast<unsigned>(i)));
    const Polynomial dv = v.derivative();
    for (int j = i - 1; j >= 1; --j) {
      const Rational jr(j);
      auto [b, c] = solve_bezout(u * dv, v, -a / jr);
      g += RationalFunction(b, pow(v, static_cast<unsigned>(j)));
      a = -(c * jr) - u * b.derivative();
    }
    d = u * v;
  }
  return {g, RationalFunction(a, d)};
}

std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& f) {
  std::vector<PartialFractionTerm> parts;
  const std::string var = f.variable();
  const Polynomial& den = f.denominator();
  auto [quotient, rem] = divmod(f.numerator(), den);
  if (!quotient.is_zero()) parts.emplace_back(PolyPart{quotient});
  if (rem.is_zero()) return parts;

  if (gcd(den, den.derivative()).degree() > 0) {
    throw Error(Errc::UnsupportedDenominator,
                "partial fractions need a squarefree denominator, got " + render(den));
  }

  const std::vector<Rational> roots = rational_roots(den);
  Polynomial cofactor = den;
  for (const auto& r : roots) {
    cofactor = exact_quotient(cofactor, Polynomial({-r, Rational(1)}, var));
  }
  const std::vector<Polynomial> quadratics = split_into_quadratics(cofactor);

  // For each coprime factor F of den: numerator N with N * (den / F) == rem (mod F).
  const auto numerator_over = [&](const Polynomial& factor) {
    const Polynomial others = exact_quotient(den, factor);
    return solve_bezout(others, factor, rem).first;
  };
  for (const auto& r : roots) {
    const Polynomial n = numerator_over(Polynomial({-r, Rational(1)}, var));
    parts.emplace_back(LinearPart{n.coefficient(0), r, 1});
  }
  for (const auto& q : quadratics) {
    parts.emplace_back(QuadraticPart{numerator_over(q).with_variable(var), q.with_variable(var), 1});
  }
  return parts;
}

RationalFunction recombine(const std::vector<PartialFractionTerm>& parts, const std::string& var) {
  RationalFunction sum = RationalFunction(Polynomial({}, var));
  for (const auto& part : parts) {
    if (const auto* p = std::get_if<PolyPart>(&part)) {
      sum += RationalFunction(p->polynomial.with_variable(var));
    } else if (const auto* l = std::get_if<LinearPart>(&part)) {
      const Polynomial lin({-l->root, Rational(1)}, var);
      sum += RationalFunction(Polynomial::constant(l->residue, var),
                              pow(lin, static_cast<unsigned>(l->power)));
    } else {
      const auto& q = std::get<QuadraticPart>(part);
      sum += RationalFunction(q.numerator.with_variable(var),
                              pow(q.quadratic, static_cast<unsigned>(q.power)).with_variable(var));
    }
  }
  return sum;
}

Antiderivative integrate_rational(const RationalFunction& f) {
  const std::string var = f.variable();
  Antiderivative out{var, {}};
  const HermiteReduction hr = hermite_reduce(f);
  const auto parts = partial_fractions(hr.remainder);

  std::vector<Term<RationalFunction>> logs;
  std::vector<Term<RationalFunction>> atans;
  for (const auto& part : parts) {
    if (const auto* p = std::get_if<PolyPart>(&part)) {
      out.terms.push_back({TermKind::Polynomial, Rational(1),
                           RationalFunction(p->polynomial.integral().with_variable(var)), false});
    }
  }
  if (!hr.rational_part.is_zero()) {
    out.terms.push_back({TermKind::Rational, Rational(1), hr.rational_part, false});
  }

  for (const auto& part : parts) {
    if (const auto* l = std::get_if<LinearPart>(&part)) {
      logs.push_back({TermKind::Log, l->residue, RationalFunction(oriented_linear(l->root, var)), true});
    } else if (const auto* q = std::get_if<QuadraticPart>(&part)) {
      // (b u + c) / (u^2 + p u + q)
      const Rational& b = q->numerator.coefficient(1);
      const Rational& c = q->numerator.coefficient(0);
      const Rational& p = q->quadratic.coefficient(1);
      const Rational& qq = q->quadratic.coefficient(0);
      const Rational shift = p / Rational(2);
      const Rational scale_sq = qq - shift * shift;
      if (!b.is_zero()) {
        logs.push_back({TermKind::Log, b / Rational(2), RationalFunction(q->quadratic),
                        scale_sq.sign() <= 0});
      }
      const Rational k = c - b * shift;
      if (k.is_zero()) continue;
      Rational m;
      if (scale_sq.sign() <= 0 || !rational_sqrt(scale_sq, m)) {
        throw Error(Errc::IrrationalAtanScale,
                    "atan scale sqrt(" + scale_sq.to_string() + ") for " + render(q->quadratic) +
                        " is not rational");
      }
      const Polynomial arg({shift / m, Rational(1) / m}, var);
      atans.push_back({TermKind::Atan, k / m, RationalFunction(arg), false});
    }
  }

  std::stable_sort(logs.begin(), logs.end(),
                   [](const auto& x, const auto& y) { return argument_before(x.argument, y.argument); });
  for (auto& t : logs) {
    if (!out.terms.empty() && out.terms.back().kind == TermKind::Log &&
        out.terms.back().argument == t.argument) {
      out.terms.back().coefficient += t.coefficient;
      if (out.terms.back().coefficient.is_zero()) out.terms.pop_back();
      continue;
    }
    out.terms.push_back(std::move(t));
  }
  for (auto& t : atans) out.terms.push_back(std::move(t));
  return out;
}

}  // namespace secant
