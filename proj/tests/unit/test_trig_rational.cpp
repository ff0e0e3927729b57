#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "secant/error.hpp"
#include "secant/trig_rational.hpp"

using namespace secant;

namespace {

const TrigRational c = TrigRational::cos();
const TrigRational s = TrigRational::sin();

Polynomial C(std::vector<long> v) {
  std::vector<Rational> r(v.begin(), v.end());
  return Polynomial(std::move(r), "c");
}

bool near_pole(const TrigRational& r, double x) {
  try {
    r.evaluate(x, 1e-3);
    return false;
  } catch (const Error&) {
    return true;
  }
}

}  // namespace

TEST(TrigRational, CanonicalForms) {
  const TrigRational sec = TrigRational::sec();
  EXPECT_EQ(sec.numerator(), TrigPolynomial(C({1}), C({})));
  EXPECT_EQ(sec.denominator(), C({0, 1}));

  EXPECT_EQ(s * s, TrigRational(TrigPolynomial(C({1, 0, -1}), C({}))));
  EXPECT_EQ(s * s + c * c, TrigRational(1));
  EXPECT_EQ((TrigRational(1) - s) / c, c / (TrigRational(1) + s));
  EXPECT_EQ(TrigRational::tan() + c / (TrigRational(1) + s), sec);
}

TEST(TrigRational, DenominatorVanishingOnCircle) {
  try {
    TrigRational(TrigPolynomial(C({1}), C({})),
                 TrigPolynomial::sin() * TrigPolynomial::sin() + TrigPolynomial::cos() * TrigPolynomial::cos() -
                     TrigPolynomial(C({1}), C({})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DenominatorVanishesOnCircle);
  }
  EXPECT_THROW(c / (s * s + c * c - TrigRational(1)), Error);
}

TEST(TrigRational, Derivatives) {
  const TrigRational sec = TrigRational::sec(), tan = TrigRational::tan();
  EXPECT_EQ(trig_derivative(sec), sec * tan);
  EXPECT_EQ(trig_derivative(sec), s / (c * c));
  EXPECT_EQ(trig_derivative(tan), sec * sec);
  EXPECT_EQ(trig_derivative(tan), TrigRational(1) / (c * c));
  EXPECT_EQ(trig_derivative(sec + tan), sec * (sec + tan));
  EXPECT_EQ(trig_derivative(s), c);
  EXPECT_EQ(trig_derivative(c), -s);
}

TEST(TrigRational, OddInCos) {
  EXPECT_TRUE(is_odd_in_cos(TrigRational::sec()));
  EXPECT_FALSE(is_odd_in_cos(s));
  EXPECT_TRUE(is_odd_in_cos(s * c));
  EXPECT_FALSE(is_odd_in_cos(c * c));
}

TEST(TrigRational, LogDerivative) {
  const TrigRational sec = TrigRational::sec(), tan = TrigRational::tan();
  EXPECT_TRUE(verify_log_derivative(sec, sec + tan));
  EXPECT_FALSE(verify_log_derivative(sec, sec));
  EXPECT_TRUE(verify_log_derivative(sec * sec / tan, tan));
  EXPECT_THROW(verify_log_derivative(sec, TrigRational(0)), Error);
}

TEST(TrigRational, Evaluate) {
  const TrigRational sec = TrigRational::sec();
  EXPECT_DOUBLE_EQ(eval_trig(sec, 0.0), 1.0);
  EXPECT_NEAR(eval_trig(sec, std::numbers::pi / 3), 2.0, 1e-14);
  try {
    eval_trig(sec, std::numbers::pi / 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularPoint);
  }
}

TEST(TrigRational, ToString) {
  EXPECT_EQ(TrigRational::sec().to_string(), "1/cos(x)");
  EXPECT_EQ((TrigRational::sec() + TrigRational::tan()).to_string(), "(1+sin(x))/cos(x)");
  EXPECT_EQ(TrigRational(0).to_string(), "0");
}

TEST(TrigRationalProperty, EqualityIsCongruence) {
  check::Gen g(41);
  for (int i = 0; i < 200; ++i) {
    const TrigRational a = g.trig_rational();
    const TrigRational k = g.trig_rational();
    const TrigRational b = (a * k) / k;  // same value, different route
    ASSERT_EQ(a, b);
    const TrigRational x = g.trig_rational();
    EXPECT_EQ(a + x, b + x);
    EXPECT_EQ(a * x, b * x);
  }
}

TEST(TrigRationalProperty, MatchesNaiveEvaluation) {
  check::Gen g(42);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const TrigPolynomial num = g.trig_polynomial(2), den = g.trig_polynomial(2);
    if (den.is_zero() || den.norm().is_zero()) continue;
    const TrigRational r(num, den);
    for (int k = 0; k < 200; ++k) {
      const double x = g.real(-3.0, 3.0);
      if (near_pole(r, x) || std::abs(den(x)) < 1e-3) continue;
      const double naive = num(x) / den(x);
      EXPECT_NEAR(r.evaluate(x), naive, 1e-10 * std::max(1.0, std::abs(naive)));
      ++compared;
    }
  }
  EXPECT_GT(compared, 10000);
}

TEST(TrigRationalProperty, DerivativeMatchesFiniteDifference) {
  check::Gen g(43);
  for (int i = 0; i < 200; ++i) {
    const TrigRational r = g.trig_rational();
    const TrigRational d = trig_derivative(r);
    for (int k = 0; k < 10; ++k) {
      const double x = g.real(-3.0, 3.0);
      if (near_pole(r, x) || near_pole(d, x)) continue;
      const double h = 1e-5;
      const auto f = [&](double t) { return r.evaluate(t, 0.0); };
      const double fd = (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
      const double exact = d.evaluate(x);
      EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact))) << r.to_string() << " at " << x;
    }
  }
}

TEST(TrigRationalProperty, LogDerivativeImpliesNumericAgreement) {
  check::Gen g(44);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const TrigRational u = g.trig_rational();
    if (u.is_zero()) continue;
    const TrigRational f = trig_derivative(u) / u;
    ASSERT_TRUE(verify_log_derivative(f, u));
    for (int k = 0; k < 5; ++k) {
      const double x = g.real(-3.0, 3.0);
      if (near_pole(u, x) || near_pole(f, x) || std::abs(u.evaluate(x)) < 1e-3) continue;
      const auto lnu = [&](double t) { return std::log(std::abs(u.evaluate(t, 0.0))); };
      const double fd = check::central_difference(lnu, x, 1e-6);
      EXPECT_NEAR(fd, f.evaluate(x), 1e-4 * std::max(1.0, std::abs(fd)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(TrigRationalProperty, ReflectionIsInvolution) {
  check::Gen g(45);
  for (int i = 0; i < 200; ++i) {
    const TrigRational r = g.trig_rational();
    EXPECT_EQ(r.reflect_cos().reflect_cos(), r);
    if (!r.is_zero()) EXPECT_TRUE(is_odd_in_cos((r + r.reflect_cos()) * c));
  }
}
