#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "raqm/rational.hpp"

using raqm::BigInt;
using raqm::Rational;

TEST(Rational, ReducesAndNormalisesSign) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParsesFractionsOnly) {
  EXPECT_EQ(Rational::parse("1/6"), Rational(1, 6));
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("0.5"), raqm::config_error);
  EXPECT_THROW(Rational::parse("1/0"), raqm::config_error);
  EXPECT_THROW(Rational::parse("/3"), raqm::config_error);
}

TEST(Rational, Arithmetic) {
  const Rational a(3, 5), b(4, 5);
  EXPECT_EQ(a * a + b * b, Rational(1));
  EXPECT_EQ(a - b, Rational(-1, 5));
  EXPECT_EQ(a / b, Rational(3, 4));
  EXPECT_EQ(a.square(), Rational(9, 25));
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, FloorAndFractionalPart) {
  EXPECT_EQ(Rational(7, 3).floor(), 2);
  EXPECT_EQ(Rational(-7, 3).floor(), -3);
  EXPECT_EQ(Rational(-1, 6).fractional(), Rational(5, 6));
  EXPECT_EQ(Rational(2).fractional(), Rational(0));
}

TEST(Rational, PerfectSquares) {
  EXPECT_EQ(raqm::is_perfect_square(Rational(144, 625)), Rational(12, 25));
  EXPECT_EQ(raqm::is_perfect_square(Rational(1)), Rational(1));
  EXPECT_EQ(raqm::is_perfect_square(Rational(0)), Rational(0));
  EXPECT_FALSE(raqm::is_perfect_square(Rational(2)).has_value());
  EXPECT_FALSE(raqm::is_perfect_square(Rational(4, 3)).has_value());
  EXPECT_THROW(raqm::is_perfect_square(Rational(-1, 4)), std::domain_error);
}

TEST(Rational, PerfectSquareOfLargeValues) {
  BigInt big = BigInt(1) << 300;
  big += 12345;
  Rational sq(big * big, BigInt(49));
  EXPECT_EQ(raqm::is_perfect_square(sq), Rational(big, BigInt(7)));
  EXPECT_FALSE(raqm::is_perfect_square(Rational(big * big + 1, BigInt(49))).has_value());
}

TEST(RationalProperty, FieldIdentitiesOnRandomValues) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    // stored reduced
    EXPECT_EQ(boost::multiprecision::gcd(a.numerator(), a.denominator()), 1);
    EXPECT_GE(a.denominator(), 1);
  }
}

TEST(RationalProperty, PerfectSquareMatchesBruteForce) {
  for (std::uint64_t n = 0; n <= 400; ++n) {
    for (std::uint64_t d = 1; d <= 40; ++d) {
      Rational r(static_cast<long long>(n), static_cast<long long>(d));
      const std::uint64_t g = std::gcd(n, d);
      const bool brute = oracle::is_square_brute(n / g) && oracle::is_square_brute(d / g);
      EXPECT_EQ(raqm::is_perfect_square(r).has_value(), brute) << r;
    }
  }
}
