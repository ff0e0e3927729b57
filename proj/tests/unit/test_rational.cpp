#include <gtest/gtest.h>

#include "generators.hpp"
#include "secant/error.hpp"
#include "secant/rational.hpp"

using namespace secant;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
}

TEST(Rational, ZeroDenominatorThrows) {
  try {
    Rational(BigInt(1), BigInt(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDenominator);
  }
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse("1.5"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, ArithmeticAndOrder) {
  const Rational half(BigInt(1), BigInt(2));
  const Rational third(BigInt(1), BigInt(3));
  EXPECT_EQ(half + third, Rational(BigInt(5), BigInt(6)));
  EXPECT_EQ(half - third, Rational(BigInt(1), BigInt(6)));
  EXPECT_EQ(half * third, Rational(BigInt(1), BigInt(6)));
  EXPECT_EQ(half / third, Rational(BigInt(3), BigInt(2)));
  EXPECT_LT(third, half);
  EXPECT_EQ((-half).abs(), half);
  EXPECT_EQ(third.inverse(), Rational(3));
  EXPECT_THROW(Rational(0).inverse(), Error);
  EXPECT_THROW(half / Rational(0), Error);
}

TEST(Rational, BigValuesStayExact) {
  Rational r(1);
  for (int i = 0; i < 40; ++i) r *= Rational(BigInt(1000003), BigInt(7));
  for (int i = 0; i < 40; ++i) r /= Rational(BigInt(1000003), BigInt(7));
  EXPECT_TRUE(r.is_one());
}

TEST(Rational, Sqrt) {
  Rational root;
  EXPECT_TRUE(rational_sqrt(Rational(BigInt(9), BigInt(4)), root));
  EXPECT_EQ(root, Rational(BigInt(3), BigInt(2)));
  EXPECT_FALSE(rational_sqrt(Rational(BigInt(3), BigInt(4)), root));
  EXPECT_FALSE(rational_sqrt(Rational(-4), root));
  EXPECT_TRUE(rational_sqrt(Rational(0), root));
  EXPECT_TRUE(root.is_zero());
}

TEST(RationalProperty, FieldAxioms) {
  check::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = g.rational(), b = g.rational(), c = g.nonzero_rational();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * c) / c, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(RationalProperty, SqrtOfSquares) {
  check::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const Rational a = g.rational(50, 50);
    Rational root;
    ASSERT_TRUE(rational_sqrt(a * a, root));
    EXPECT_EQ(root, a.abs());
  }
}
