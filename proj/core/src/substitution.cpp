#include "secant/substitution.hpp"

#include <numbers>

#include "secant/error.hpp"

namespace secant {

namespace {

constexpr double kValidLo = -std::numbers::pi / 2 + 0.1;
constexpr double kValidHi = std::numbers::pi / 2 - 0.1;

RationalFunction ratfunc(std::vector<Rational> num, std::vector<Rational> den, const std::string& var) {
  return RationalFunction(Polynomial(std::move(num), var), Polynomial(std::move(den), var));
}

// u = sec x + tan x = (1 + sin x) / cos x
TrigRational sec_plus_tan() { return TrigRational::sec() + TrigRational::tan(); }

// Hyperbola/circle maps shared by Gregory and the modified Weierstrass
// substitution: cos = 2p/(p^2+1), sin = (p^2-1)/(p^2+1), dx = 2/(p^2+1).
Substitution secant_family(SubstitutionName name, const std::string& p) {
  return Substitution{
      name,
      p,
      ratfunc({0, 2}, {1, 0, 1}, p),
      ratfunc({-1, 0, 1}, {1, 0, 1}, p),
      ratfunc({2}, {1, 0, 1}, p),
      sec_plus_tan(),
      "sec(x)+tan(x)",
      kValidLo,
      kValidHi,
  };
}

std::array<Substitution, 4> make_builtins() {
  const std::string t = "t";
  Substitution weierstrass{
      SubstitutionName::Weierstrass,
      t,
      ratfunc({1, 0, -1}, {1, 0, 1}, t),
      ratfunc({0, 2}, {1, 0, 1}, t),
      ratfunc({2}, {1, 0, 1}, t),
      // tan(x/2) = sin x / (1 + cos x)
      TrigRational::sin() / (TrigRational(1) + TrigRational::cos()),
      "tan(x/2)",
      kValidLo,
      kValidHi,
  };
  Substitution barrow{
      SubstitutionName::Barrow,
      "u",
      std::nullopt,
      RationalFunction(Polynomial::identity("u")),
      std::nullopt,
      TrigRational::sin(),
      "sin(x)",
      kValidLo,
      kValidHi,
  };
  return {secant_family(SubstitutionName::Gregory, "u"), barrow, weierstrass,
          secant_family(SubstitutionName::ModifiedWeierstrass, "s")};
}

// P(c) with only even powers, rewritten as P(sqrt(1 - u^2)).
Polynomial even_cos_to_u(const Polynomial& p, const std::string& u) {
  const Polynomial one_minus_u2({Rational(1), Rational(0), Rational(-1)}, u);
  Polynomial out({}, u);
  Polynomial power = Polynomial::constant(1, u);
  for (int k = 0; k <= p.degree(); k += 2) {
    out += power * p.coefficient(k);
    power *= one_minus_u2;
  }
  return out;
}

bool is_even(const Polynomial& p) {
  for (int k = 1; k <= p.degree(); k += 2) {
    if (!p.coefficient(k).is_zero()) return false;
  }
  return true;
}

SubstitutionResult apply_barrow(const TrigRational& r, const Substitution& sub) {
  if (!is_odd_in_cos(r)) {
    throw Error(Errc::NotApplicable,
                "u = sin(x) needs an integrand odd in cos(x); " + r.to_string() + " is not");
  }
  const std::string& u = sub.parameter;
  // R dx = (R / cos x) cos x dx = (R / cos x) du, and R / cos x is even in c.
  const TrigRational even = r / TrigRational::cos();
  const Polynomial& a = even.numerator().cos_part();
  const Polynomial& b = even.numerator().sin_part();
  const Polynomial& d = even.denominator();
  if (!is_even(a) || !is_even(b) || !is_even(d)) {
    throw Error(Errc::NotApplicable, "R/cos(x) is not even in cos(x)");
  }
  const Polynomial num = even_cos_to_u(a, u) + even_cos_to_u(b, u) * Polynomial::identity(u);
  const Polynomial den = even_cos_to_u(d, u);
  if (den.is_zero()) {
    throw Error(Errc::DenominatorVanishesIdentically, "denominator vanishes after u = sin(x)");
  }
  return {RationalFunction(num, den), sub.name};
}

RationalFunction compose_into(const Polynomial& p, const RationalFunction& at) {
  return horner(p, at, RationalFunction(Polynomial({}, at.variable())));
}

TrigRational compose_trig(const RationalFunction& f, const TrigRational& at) {
  const TrigRational num = horner(f.numerator(), at, TrigRational());
  const TrigRational den = horner(f.denominator(), at, TrigRational());
  return num / den;
}

}  // namespace

std::string_view to_string(SubstitutionName name) {
  switch (name) {
    case SubstitutionName::Gregory: return "gregory";
    case SubstitutionName::Barrow: return "barrow";
    case SubstitutionName::Weierstrass: return "weierstrass";
    case SubstitutionName::ModifiedWeierstrass: return "modified-weierstrass";
  }
  return "";
}

const std::array<Substitution, 4>& builtin_substitutions() {
  static const std::array<Substitution, 4> subs = make_builtins();
  return subs;
}

const Substitution& substitution(SubstitutionName name) {
  for (const auto& s : builtin_substitutions()) {
    if (s.name == name) return s;
  }
  throw Error(Errc::InvalidArgument, "unknown substitution");
}

SubstitutionResult apply_substitution(const TrigRational& r, const Substitution& sub) {
  if (sub.name == SubstitutionName::Barrow) return apply_barrow(r, sub);

  const RationalFunction& cos_expr = *sub.cos_expr;
  const RationalFunction& sin_expr = sub.sin_expr;
  const Polynomial& a = r.numerator().cos_part();
  const Polynomial& b = r.numerator().sin_part();
  const RationalFunction num = compose_into(a, cos_expr) + compose_into(b, cos_expr) * sin_expr;
  const RationalFunction den = compose_into(r.denominator(), cos_expr);
  if (den.is_zero()) {
    throw Error(Errc::DenominatorVanishesIdentically,
                "denominator vanishes identically under " + std::string(to_string(sub.name)));
  }
  return {(num / den * *sub.dx_expr).with_variable(sub.parameter), sub.name};
}

TrigAntiderivative back_substitute(const Antiderivative& f, const Substitution& sub) {
  if (f.variable != sub.parameter) {
    throw Error(Errc::InvalidArgument,
                "antiderivative in " + f.variable + " cannot be back-substituted for " + sub.parameter);
  }
  TrigAntiderivative out{"x", {}};
  out.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) {
    out.terms.push_back({t.kind, t.coefficient,
                         TrigArgument{t.argument, sub.back_sub_text, compose_trig(t.argument, sub.back_sub)},
                         t.absolute});
  }
  return out;
}

}  // namespace secant
