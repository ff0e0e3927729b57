#include <gtest/gtest.h>

#include <cmath>

#include "secant/error.hpp"
#include "secant/rational_integration.hpp"
#include "secant/substitution.hpp"
#include "secant/verify.hpp"

using namespace secant;

namespace {

const TrigRational sec = TrigRational::sec();

TrigAntiderivative via(SubstitutionName name, const TrigRational& r) {
  const Substitution& sub = substitution(name);
  return back_substitute(integrate_rational(apply_substitution(r, sub).integrand), sub);
}

TrigAntiderivative with_constant(TrigAntiderivative f, long k) {
  Term<TrigArgument> t;
  t.kind = TermKind::Polynomial;
  t.coefficient = Rational(1);
  t.argument = {RationalFunction(Rational(k)), "x", TrigRational(k)};
  f.terms.push_back(t);
  return f;
}

}  // namespace

TEST(DiffCheck, Examples) {
  const TrigAntiderivative f = via(SubstitutionName::Gregory, sec);
  EXPECT_LT(diff_check(f, sec), 1e-6);
  EXPECT_GT(diff_check(f, TrigRational::tan()), 0.1);
}

TEST(DiffCheck, LinearTermIsExact) {
  // x itself comes out of integrating 1 under any substitution
  const TrigAntiderivative f = via(SubstitutionName::Weierstrass, TrigRational(1));
  EXPECT_LT(diff_check(f, TrigRational(1)), 1e-8);
}

TEST(DiffCheck, MalformedDomain) {
  const TrigAntiderivative f = via(SubstitutionName::Gregory, sec);
  VerificationDomain dom;
  dom.lo = 1.0;
  dom.hi = -1.0;
  EXPECT_THROW(diff_check(f, sec, dom), Error);
  dom = {};
  dom.samples = 0;
  EXPECT_THROW(diff_check(f, sec, dom), Error);
}

TEST(DiffCheck, PoleInsideDomainIsAvoidedOrReported) {
  // tan on a window containing pi/2 throws DomainUnusable only if the grid cannot dodge it
  const TrigAntiderivative f = via(SubstitutionName::Barrow, TrigRational::tan());
  VerificationDomain dom;
  dom.lo = 1.0;
  dom.hi = 2.0;
  dom.samples = 25;
  try {
    EXPECT_LT(diff_check(f, TrigRational::tan(), dom), 1e-6);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DomainUnusable);
  }
}

TEST(DiffCheck, UnusableDomain) {
  const TrigAntiderivative f = via(SubstitutionName::Gregory, sec);
  VerificationDomain dom;
  dom.lo = std::acos(0.0) - 1e-8;
  dom.hi = std::acos(0.0) + 1e-8;
  try {
    diff_check(f, sec, dom);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DomainUnusable);
  }
}

TEST(ConstantDifference, Examples) {
  const TrigAntiderivative g = via(SubstitutionName::Gregory, sec);
  const TrigAntiderivative b = via(SubstitutionName::Barrow, sec);
  const TrigAntiderivative w = via(SubstitutionName::Weierstrass, sec);

  ConstantDifference d = constant_difference_check(g, b);
  EXPECT_TRUE(d.is_constant);
  EXPECT_NEAR(d.constant, 0.0, 1e-8);

  d = constant_difference_check(g, with_constant(g, 3));
  EXPECT_TRUE(d.is_constant);
  EXPECT_NEAR(d.constant, -3.0, 1e-12);

  d = constant_difference_check(g, w);
  EXPECT_TRUE(d.is_constant);
  EXPECT_NEAR(d.constant, 0.0, 1e-8);

  const TrigAntiderivative tan_integral = via(SubstitutionName::Gregory, TrigRational::tan());
  EXPECT_FALSE(constant_difference_check(g, tan_integral).is_constant);
}

TEST(SampleGrid, FixedGridAndRedraw) {
  VerificationDomain dom;
  dom.lo = 0.0;
  dom.hi = 1.0;
  dom.samples = 4;
  const auto all = sample_grid(dom, 0.0, [](double) { return true; });
  ASSERT_EQ(all.size(), 4u);
  EXPECT_DOUBLE_EQ(all[0], 0.125);
  EXPECT_DOUBLE_EQ(all[3], 0.875);

  const auto moved = sample_grid(dom, 0.0, [](double x) { return std::abs(x - 0.125) > 1e-3; });
  ASSERT_EQ(moved.size(), 4u);
  EXPECT_GT(std::abs(moved[0] - 0.125), 1e-3);
  EXPECT_GT(moved[0], 0.0);
  EXPECT_LT(moved[0], 0.375);

  EXPECT_THROW(sample_grid(dom, 0.0, [](double) { return false; }), Error);
}
