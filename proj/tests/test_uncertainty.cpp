#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "raqm/uncertainty.hpp"

using raqm::LatticePoint;
using raqm::Rational;
using raqm::RationalAngle;
using raqm::Real;

TEST(Uncertainty, InequalityOnRandomDirections) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1, 1), ph(0, 6.283185307179586);
  for (int k = 0; k < 10000; ++k) {
    const double c = u(rng), phi = ph(rng);
    const auto r = raqm::uncertainty_check(raqm::direction_from(Real(c), Real(phi)));
    // oracle: sin θ′ sin θ″ ≥ |cos θ| via 1 − c′² − c″² + c′²c″² ≥ c²
    const double s = std::sqrt(1 - c * c);
    const double cp = s * std::cos(phi), cpp = s * std::sin(phi);
    ASSERT_GE((1 - cp * cp) * (1 - cpp * cpp) + 1e-12, c * c);
    ASSERT_TRUE(r.holds);
  }
}

TEST(Uncertainty, EqualityAtPolesAndEquatorAxes) {
  EXPECT_TRUE(raqm::uncertainty_check(raqm::direction_from(LatticePoint(8, 0, 8))).equality);
  EXPECT_TRUE(raqm::uncertainty_check(raqm::direction_from(LatticePoint(4, 0, 8))).equality);
  EXPECT_FALSE(raqm::uncertainty_check(raqm::direction_from(LatticePoint(6, 1, 8))).equality);
}

TEST(Uncertainty, AllLatticeTriplesUpTo24) {
  for (std::uint64_t L = 1; L <= 24; ++L) {
    for (const auto& p : raqm::enumerate_sphere(L)) {
      const auto r = raqm::uncertainty_check(raqm::direction_from(p));
      ASSERT_TRUE(r.holds) << p.m() << "," << p.n() << "," << L;
      ASSERT_LT(abs(r.delta_sx_delta_sy * 4 - r.sigma_product), oracle::tol());
    }
  }
}

TEST(Uncertainty, RejectsNonUnitCosines) {
  raqm::DirectionCosines d{Real(1) / 2, Real(1) / 2, Real(1) / 2};
  EXPECT_THROW(raqm::uncertainty_check(d), std::invalid_argument);
}

TEST(SpinObstruction, ThirdSideIsSinThetaCosPhi) {
  // cos θ = 1/3, φ = 1/8 turn: √(8/9)·√2/2 = 2/3
  const auto c = raqm::spin_obstruction(Rational(1, 3), RationalAngle(1, 8));
  ASSERT_TRUE(c.is_rational());
  EXPECT_EQ(c.value(), Rational(2, 3));
  // cos θ = 1/2, φ = 1/7 turn: Niven
  EXPECT_EQ(raqm::spin_obstruction(Rational(1, 2), RationalAngle(1, 7)).kind(),
            raqm::ExactCosine::Kind::irrational_by_niven);
}

TEST(Aggregate, UniformSphereMoments) {
  const auto r = raqm::position_momentum_aggregate(100000, 4);
  EXPECT_NEAR(r.mean_abs_cos, 0.5, 0.005);
  // E[sin²θ cos²φ] = 1/3, so σ² means are 2/3 and the bound is 2/3
  EXPECT_NEAR(r.mean_sigma_sq_prime, 2.0 / 3, 0.005);
  EXPECT_NEAR(r.bound, 2.0 / 3, 0.005);
  EXPECT_TRUE(r.holds_half);
  EXPECT_TRUE(r.chain_holds);
}

TEST(Aggregate, SameSeedSameResult) {
  const auto a = raqm::position_momentum_aggregate(1000, 9), b = raqm::position_momentum_aggregate(1000, 9);
  EXPECT_EQ(a.mean_abs_cos, b.mean_abs_cos);
  EXPECT_EQ(a.bound, b.bound);
}

TEST(Aggregate, EmptyInputFails) {
  EXPECT_THROW(raqm::position_momentum_aggregate(0, 1), std::invalid_argument);
}
