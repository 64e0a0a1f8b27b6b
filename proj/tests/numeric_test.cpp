#include "eres/numeric.hpp"

#include <gtest/gtest.h>

#include <random>

namespace eres {
namespace {

TEST(Rational, ReducesAndKeepsDenominatorPositive) {
  const Rational q(6, -4);
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, FieldOperations) {
  const Rational a(3, 4), b(5, 6);
  EXPECT_EQ(a + b, Rational(19, 12));
  EXPECT_EQ(a - b, Rational(-1, 12));
  EXPECT_EQ(a * b, Rational(5, 8));
  EXPECT_EQ(a / b, Rational(9, 10));
  EXPECT_LT(a, b);
  EXPECT_THROW(a / Rational(0), DomainError);
}

TEST(Rational, OverflowRaisesInsteadOfWrapping) {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
  EXPECT_THROW(big * Rational(4), DomainError);
  EXPECT_THROW(Rational(1, 3) + Rational(1, std::numeric_limits<std::int64_t>::max()), DomainError);
}

TEST(Rational, AgreesWithUnboundedArithmetic) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-40, 40), pos(1, 40);
  for (int k = 0; k < 2000; ++k) {
    const int an = d(rng), ad = pos(rng), bn = d(rng), bd = pos(rng);
    const Rational a(an, ad), b(bn, bd);
    const BigRational A(BigRational(an) / ad), B(BigRational(bn) / bd);
    EXPECT_EQ(to_string(a + b), to_string(BigRational(A + B)));
    EXPECT_EQ(to_string(a * b), to_string(BigRational(A * B)));
    EXPECT_EQ(a < b, A < B);
  }
}

TEST(Rational, Parses) {
  EXPECT_EQ(parse_rational("7/21"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_THROW(parse_rational("1/x"), DomainError);
  EXPECT_THROW(parse_rational("1.5"), DomainError);
}

TEST(Coefficient, ReducesModuloP) {
  const Coefficient half = Coefficient::from_rational(5, BigRational(1) / 2);
  EXPECT_EQ(half.to_string(), "3/1");
  EXPECT_EQ((half * Coefficient::from_int(5, 2)).to_string(), "1/1");
  EXPECT_TRUE(Coefficient::from_int(3, 6).is_zero());
  EXPECT_THROW(Coefficient::from_rational(3, BigRational(1) / 3), DomainError);
  EXPECT_THROW(Coefficient::from_int(4, 1), DomainError);
}

TEST(Coefficient, InversesAndPowers) {
  for (unsigned p : {2U, 3U, 5U, 7U})
    for (long v = 1; v < static_cast<long>(p); ++v) {
      const Coefficient c = Coefficient::from_int(p, v);
      EXPECT_EQ(c * c.inverse(), Coefficient::one(p));
      EXPECT_EQ(c.pow(static_cast<long>(p) - 1), Coefficient::one(p));
      EXPECT_EQ(c.pow(-2) * c.pow(2), Coefficient::one(p));
    }
  const Coefficient q = Coefficient::from_rational(0, BigRational(2) / 3);
  EXPECT_EQ(q.pow(-3).to_string(), "27/8");
  EXPECT_THROW(Coefficient::from_int(0, 1) * Coefficient::from_int(3, 1), DomainError);
}

}  // namespace
}  // namespace eres
