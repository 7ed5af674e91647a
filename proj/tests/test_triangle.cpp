#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "raqm/triangle.hpp"

using raqm::ExactCosine;
using raqm::Rational;
using raqm::RationalAngle;

namespace {

Rational random_cosine(std::mt19937_64& rng, long long max_den) {
  std::uniform_int_distribution<long long> den(1, max_den);
  const long long d = den(rng);
  std::uniform_int_distribution<long long> num(-d, d);
  return Rational(num(rng), d);
}

RationalAngle random_angle(std::mt19937_64& rng, long long max_den) {
  std::uniform_int_distribution<long long> den(1, max_den);
  const long long d = den(rng);
  std::uniform_int_distribution<long long> num(0, d - 1);
  return RationalAngle(num(rng), d);
}

}  // namespace

TEST(SphericalThirdSide, AntipodalInteriorAngle) {
  // 9/25 − 16/25
  ExactCosine c = raqm::spherical_third_side(Rational(3, 5), Rational(3, 5), RationalAngle(1, 2));
  ASSERT_TRUE(c.is_rational());
  EXPECT_EQ(c.value(), Rational(-7, 25));
}

TEST(SphericalThirdSide, DegenerateSideGivesOtherCosine) {
  for (const Rational q : {Rational(0), Rational(1, 7), Rational(-5, 9)}) {
    for (const RationalAngle phi : {RationalAngle(1, 7), RationalAngle(0), RationalAngle(1, 8)}) {
      ExactCosine c = raqm::spherical_third_side(Rational(1), q, phi);
      ASSERT_TRUE(c.is_rational());
      EXPECT_EQ(c.value(), q);
    }
  }
}

TEST(SphericalThirdSide, GenericAngleIsIrrationalByNiven) {
  ExactCosine c = raqm::spherical_third_side(Rational(3, 5), Rational(4, 5), RationalAngle(1, 7));
  ASSERT_EQ(c.kind(), ExactCosine::Kind::irrational_by_niven);
  EXPECT_EQ(c.witness(), RationalAngle(2, 7));
  EXPECT_TRUE(raqm::certificate_valid(c));
}

TEST(SphericalThirdSide, NonSquareRadicandGivesSurd) {
  // 0 + √((1−1/4)(1−1/4))·(1/2) = 3/8? r = 9/16 is a square: rational.
  EXPECT_TRUE(raqm::spherical_third_side(Rational(1, 2), Rational(1, 2), RationalAngle(1, 6)).is_rational());
  // r = (3/4)(8/9) = 2/3 is not a square.
  ExactCosine c = raqm::spherical_third_side(Rational(1, 2), Rational(1, 3), RationalAngle(1, 6));
  ASSERT_EQ(c.kind(), ExactCosine::Kind::irrational_surd);
  EXPECT_TRUE(raqm::certificate_valid(c));
}

TEST(SphericalThirdSide, RejectsNonCosines) {
  EXPECT_THROW(raqm::spherical_third_side(Rational(3, 2), Rational(0), RationalAngle(0)), std::domain_error);
}

TEST(SphericalThirdSide, EighthTurnCanStillCloseRationally) {
  // cos²(π/4) = 1/2 is rational, so √r·cos φ can be rational:
  // r = 1·(1 − 1/9) = 8/9, √(2r)/2 = 2/3.
  ExactCosine c = raqm::spherical_third_side(Rational(0), Rational(1, 3), RationalAngle(1, 8));
  ASSERT_TRUE(c.is_rational());
  EXPECT_EQ(c.value(), Rational(2, 3));
  EXPECT_LT(boost::multiprecision::abs(c.value().to<oracle::Real200>() -
                                       oracle::third_side(0, oracle::Real200(1) / 3, 1, 8)),
            oracle::tol());
}

TEST(SphericalThirdSideProperty, MatchesNumericCosineRule) {
  std::mt19937_64 rng(2024);
  int valued = 0;
  for (int i = 0; i < 10000; ++i) {
    const Rational cab = random_cosine(rng, 30), cbc = random_cosine(rng, 30);
    const RationalAngle phi = random_angle(rng, 24);
    ExactCosine c = raqm::spherical_third_side(cab, cbc, phi);
    ASSERT_TRUE(raqm::certificate_valid(c));
    const oracle::Real200 expected =
        oracle::third_side(cab.to<oracle::Real200>(), cbc.to<oracle::Real200>(),
                           static_cast<long long>(phi.turns().numerator()),
                           static_cast<long long>(phi.turns().denominator()));
    if (auto exact = c.exact()) {
      ++valued;
      ASSERT_LT(boost::multiprecision::abs(oracle::Real200(exact->to_real()) - expected), oracle::tol())
          << cab << " " << cbc << " " << phi;
    }
  }
  EXPECT_GT(valued, 1000);
}

TEST(SphericalThirdSideProperty, NeverUndecidedForSmallDenominators) {
  std::mt19937_64 rng(7);
  for (long long d = 1; d <= 12; ++d) {
    for (long long n = 0; n < d; ++n) {
      if (std::gcd(n, d) != 1) continue;
      for (int i = 0; i < 200; ++i) {
        EXPECT_NO_THROW(raqm::spherical_third_side(random_cosine(rng, 50), random_cosine(rng, 50), RationalAngle(n, d)));
      }
    }
  }
}

TEST(ItcVerdict, ImpossibleTriangleOfOneDegree) {
  auto v = raqm::itc_verdict(Rational(3, 5), Rational(4, 5), RationalAngle(1, 360));
  EXPECT_FALSE(v.possible);
  EXPECT_FALSE(v.degenerate);
  EXPECT_EQ(v.third_side.kind(), ExactCosine::Kind::irrational_by_niven);
}

TEST(ItcVerdict, ExceptionsAndDegenerateCases) {
  auto flat = raqm::itc_verdict(Rational(3, 5), Rational(3, 5), RationalAngle(1, 2));
  EXPECT_TRUE(flat.possible);
  EXPECT_EQ(flat.third_side.value(), Rational(-7, 25));

  auto triad = raqm::itc_verdict(Rational(0), Rational(0), RationalAngle(1, 4));
  EXPECT_TRUE(triad.possible);
  EXPECT_EQ(triad.third_side.value(), Rational(0));

  auto degenerate = raqm::itc_verdict(Rational(1), Rational(1, 3), RationalAngle(1, 7));
  EXPECT_TRUE(degenerate.possible);
  EXPECT_TRUE(degenerate.degenerate);
  EXPECT_EQ(degenerate.reason, "degenerate");
}

TEST(ItcVerdictProperty, NoRationalTriangleOutsideNivenSquareSet) {
  std::mt19937_64 rng(99);
  int tested = 0;
  for (int i = 0; i < 20000; ++i) {
    const Rational cab = random_cosine(rng, 60), cbc = random_cosine(rng, 60);
    if (cab.abs() == Rational(1) || cbc.abs() == Rational(1)) continue;
    const RationalAngle phi = random_angle(rng, 360);
    if (raqm::niven_rational_square_denominator(phi.reduced_denominator())) continue;
    ++tested;
    ASSERT_FALSE(raqm::itc_verdict(cab, cbc, phi).possible) << cab << " " << cbc << " " << phi;
  }
  EXPECT_GT(tested, 10000);
}
