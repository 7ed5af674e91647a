#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "raqm/lattice.hpp"

using raqm::BitString;
using raqm::LatticePoint;
using raqm::Pno;
using raqm::Rational;
namespace pno = raqm::pno;

namespace {

BitString from_ints(const std::vector<int>& v) {
  BitString s;
  for (int b : v) s.push_back(b);
  return s;
}

std::vector<BitString> all_strings(int L) {
  std::vector<BitString> out;
  for (const auto& v : oracle::all_strings(L)) out.push_back(from_ints(v));
  return out;
}

}  // namespace

TEST(BitString, RejectsNonUnitEntries) {
  EXPECT_THROW((BitString{1, 0, -1}), std::invalid_argument);
  EXPECT_THROW((BitString{2}), std::invalid_argument);
}

TEST(BitString, PrintsBraceList) {
  EXPECT_EQ((BitString{1, -1, -1, 1}).str(), "{1,-1,-1,1}");
  EXPECT_EQ((BitString{1, -1}).list(), "1 -1");
}

TEST(BitString, BlockAndConcat) {
  EXPECT_EQ(BitString::block(3, 4), (BitString{1, 1, 1, -1}));
  EXPECT_EQ((BitString{1} + BitString{-1, -1}), (BitString{1, -1, -1}));
  EXPECT_THROW(BitString::block(5, 4), std::out_of_range);
}

TEST(OnesFraction, EmptyStringFails) { EXPECT_THROW(raqm::ones_fraction(BitString{}), std::invalid_argument); }

TEST(OnesFraction, CountsOnesOverLength) {
  EXPECT_EQ(raqm::ones_fraction(BitString{1, -1, -1, 1}), Rational(1, 2));
  EXPECT_EQ(raqm::ones_fraction(BitString{1, 1, -1}), Rational(2, 3));
}

TEST(OnesFraction, EqualsCosSqHalfThetaEverywhereUpTo64) {
  for (std::uint64_t L = 1; L <= 64; ++L) {
    for (std::uint64_t m = 0; m <= L; ++m) {
      const std::uint64_t nmax = (m == 0 || m == L) ? 1 : L;
      for (std::uint64_t n = 0; n < nmax; ++n) {
        LatticePoint p(m, n, L);
        const BitString s = raqm::canonical_bitstring(p);
        // count directly
        std::uint64_t ones = 0;
        for (std::size_t k = 0; k < s.size(); ++k) ones += s[k] == 1;
        ASSERT_EQ(ones, m);
        ASSERT_EQ(raqm::ones_fraction(s), p.cos_sq_half_theta()) << "m=" << m << " n=" << n << " L=" << L;
      }
    }
  }
}

TEST(PnoI, ActsOnPairs) {
  EXPECT_EQ(raqm::apply_i(BitString{1, 1}), (BitString{-1, 1}));
  EXPECT_EQ(raqm::apply_i(BitString{-1, 1}), (BitString{-1, -1}));
  EXPECT_EQ(raqm::apply_i(BitString{1, -1}), (BitString{1, 1}));
}

TEST(PnoI, SquaresToNegation) {
  const Pno sq = pno::i() * pno::i();
  for (const auto& s : all_strings(2)) {
    EXPECT_EQ(sq(s), s.negated());
    EXPECT_EQ(pno::i().pow(4)(s), s);
  }
}

TEST(Quaternions, MatchComponentDefinitions) {
  // I{a1..a4} = {a3, a4, -a1, -a2}, J = {a2, -a1, -a4, a3}, K = {-a4, a3, -a2, a1}
  for (const auto& v : oracle::all_strings(4)) {
    const BitString s = from_ints(v);
    EXPECT_EQ(raqm::quaternion_apply(pno::Quaternion::I, s), from_ints({v[2], v[3], -v[0], -v[1]}));
    EXPECT_EQ(raqm::quaternion_apply(pno::Quaternion::J, s), from_ints({v[1], -v[0], -v[3], v[2]}));
    EXPECT_EQ(raqm::quaternion_apply(pno::Quaternion::K, s), from_ints({-v[3], v[2], -v[1], v[0]}));
  }
}

TEST(Quaternions, RelationsHoldOnAllSixteenStrings) {
  const Pno& I = pno::quaternion(pno::Quaternion::I);
  const Pno& J = pno::quaternion(pno::Quaternion::J);
  const Pno& K = pno::quaternion(pno::Quaternion::K);
  const auto strings = all_strings(4);
  ASSERT_EQ(strings.size(), 16u);
  for (const auto& s : strings) {
    EXPECT_EQ((I * I)(s), s.negated());
    EXPECT_EQ((J * J)(s), s.negated());
    EXPECT_EQ((K * K)(s), s.negated());
    EXPECT_EQ((I * J)(s), K(s));
    EXPECT_EQ((I * J * K)(s), s.negated());
  }
}

TEST(Quaternions, NorthPoleImages) {
  const BitString north{1, 1, 1, 1};
  EXPECT_EQ(raqm::quaternion_apply(pno::Quaternion::I, north), (BitString{1, 1, -1, -1}));
  EXPECT_EQ(raqm::quaternion_apply(pno::Quaternion::J, north), (BitString{1, -1, -1, 1}));
  EXPECT_EQ(raqm::quaternion_apply(pno::Quaternion::K, BitString{1, 1, -1, -1}), (BitString{1, -1, -1, 1}));
}

TEST(Zeta, ShiftsLeftCyclically) {
  EXPECT_EQ(raqm::zeta(BitString{1, 1, -1, -1}), (BitString{1, -1, -1, 1}));
  EXPECT_EQ(raqm::zeta(BitString{1, -1, -1}, 2), (BitString{-1, 1, -1}));
  EXPECT_EQ(raqm::zeta(BitString{1, -1, -1}, -1), (BitString{-1, 1, -1}));
}

TEST(Zeta, OrderLOnEveryStringUpTo10) {
  for (int L = 1; L <= 10; ++L) {
    for (const auto& s : all_strings(L)) {
      ASSERT_EQ(raqm::zeta(s, L), s);
      // orbit size is the primitive period
      int period = 1;
      while (raqm::zeta(s, period) != s) ++period;
      ASSERT_EQ(L % period, 0);
    }
  }
}

TEST(Zeta, AperiodicStringHasFullOrbit) {
  const BitString s = BitString::block(1, 7);
  std::set<std::string> orbit;
  for (int k = 0; k < 7; ++k) orbit.insert(raqm::zeta(s, k).str());
  EXPECT_EQ(orbit.size(), 7u);
}

TEST(Pno, GroupLaws) {
  const Pno a = Pno::cyclic_shift(5, 2);
  const Pno b({4, 0, 3, 1, 2}, {true, false, false, true, false});
  const Pno c = Pno::negation(5);
  const Pno e = Pno::identity(5);
  for (const auto& s : all_strings(5)) {
    EXPECT_EQ(((a * b) * c)(s), (a * (b * c))(s));
    EXPECT_EQ((b * b.inverse())(s), s);
    EXPECT_EQ((b.inverse() * b)(s), s);
    EXPECT_EQ((e * a)(s), a(s));
    EXPECT_EQ((a * b)(s), a(b(s)));
  }
}

TEST(Pno, LengthMismatchFails) { EXPECT_THROW(Pno::identity(3)(BitString{1, 1}), std::invalid_argument); }

TEST(LatticePoint, ValidatesRanges) {
  EXPECT_THROW(LatticePoint(5, 0, 4), std::out_of_range);
  EXPECT_THROW(LatticePoint(2, 4, 4), std::out_of_range);
  EXPECT_THROW(LatticePoint(0, 0, 0), std::invalid_argument);
}

TEST(LatticePoint, PolesIgnoreAzimuth) {
  EXPECT_EQ(LatticePoint(4, 3, 4).n(), 0u);
  EXPECT_EQ(LatticePoint(0, 2, 4).n(), 0u);
}

TEST(LatticePoint, CosThetaIsTwoMOverLMinusOne) {
  EXPECT_EQ(LatticePoint(3, 0, 4).cos_theta(), Rational(1, 2));
  EXPECT_EQ(LatticePoint(2, 1, 3).cos_theta(), Rational(1, 3));
  EXPECT_EQ(LatticePoint(2, 1, 4).phi().turns(), Rational(1, 4));
}

TEST(CanonicalBitstring, Examples) {
  EXPECT_EQ(raqm::canonical_bitstring(LatticePoint(3, 0, 4)), (BitString{1, 1, 1, -1}));
  EXPECT_EQ(raqm::canonical_bitstring(LatticePoint(2, 1, 4)), (BitString{1, -1, -1, 1}));
}

TEST(EnumerateSphere, CountsPolesPlusInterior) {
  for (std::uint64_t L = 2; L <= 12; ++L) {
    const auto pts = raqm::enumerate_sphere(L);
    EXPECT_EQ(pts.size(), 2 + (L - 1) * L);
    std::set<std::pair<std::uint64_t, std::uint64_t>> distinct;
    for (const auto& p : pts) distinct.insert({p.m(), p.n()});
    EXPECT_EQ(distinct.size(), pts.size());
  }
}

TEST(EnumerateSphere, L4HasFourteenDistinctStrings) {
  std::set<std::string> strings;
  for (const auto& p : raqm::enumerate_sphere(4)) strings.insert(raqm::canonical_bitstring(p).str());
  EXPECT_EQ(strings.size(), 14u);
}

TEST(SpinorialCircle, L2IsPowersOfI) {
  const auto c = raqm::build_spinorial_circle(2);
  const std::vector<BitString> expected{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  EXPECT_EQ(c, expected);
}

TEST(SpinorialCircle, L4ReproducesTheEightListedStrings) {
  const std::vector<BitString> expected{{1, 1, 1, 1},   {1, 1, -1, 1},   {1, 1, -1, -1}, {1, -1, -1, -1},
                                        {-1, -1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, 1, 1}};
  EXPECT_EQ(raqm::build_spinorial_circle(4), expected);
}

TEST(SpinorialCircle, L4OrthogonalCircleIsOneCyclicStep) {
  const std::vector<BitString> expected{{1, 1, 1, 1},   {1, -1, 1, 1},   {1, -1, -1, 1}, {-1, -1, -1, 1},
                                        {-1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, 1, 1, -1}, {1, 1, 1, -1}};
  const auto c = raqm::build_spinorial_circle(4);
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(raqm::zeta(c[k]), expected[k]) << k;
}

TEST(SpinorialCircle, LatitudesWalkPoleToPoleAndBack) {
  for (std::uint64_t L : {2u, 4u, 8u, 16u, 32u}) {
    const auto c = raqm::build_spinorial_circle(L);
    ASSERT_EQ(c.size(), 2 * L);
    std::set<std::string> distinct;
    for (std::size_t k = 0; k < c.size(); ++k) {
      distinct.insert(c[k].str());
      const std::uint64_t j = k <= L ? k : 2 * L - k;
      // j steps from the north pole: L − j ones
      EXPECT_EQ(raqm::ones_fraction(c[k]), Rational(static_cast<long long>(L - j), static_cast<long long>(L)))
          << "L=" << L << " k=" << k;
    }
    EXPECT_EQ(distinct.size(), 2 * L);
  }
}

TEST(SpinorialCircle, RejectsNonPowersOfTwo) {
  EXPECT_THROW(raqm::build_spinorial_circle(6), std::invalid_argument);
  EXPECT_THROW(raqm::build_spinorial_circle(1), std::invalid_argument);
}

TEST(InterpolatedCircle, L3ReproducesTheFourListedStrings) {
  const std::vector<BitString> expected{{1, 1, 1}, {1, 1, -1}, {1, -1, -1}, {-1, -1, -1}};
  const auto c = raqm::interpolated_circle(3);
  EXPECT_EQ(c, expected);
  EXPECT_EQ(raqm::latitude_cos(c[1]), Rational(1, 3));
  EXPECT_EQ(raqm::latitude_cos(c[2]), Rational(-1, 3));
}

TEST(InterpolatedCircle, L3IsL4WithLastBitDropped) {
  const auto four = raqm::build_spinorial_circle(4);
  const auto three = raqm::interpolated_circle(3);
  // z(0,0), z(π/3,0), z(2π/3,0), z(π,0) of the 4-bit circle
  const std::size_t pick[] = {0, 1, 3, 4};
  for (std::size_t k = 0; k < 4; ++k) {
    BitString cut;
    for (std::size_t j = 0; j < 3; ++j) cut.push_back(four[pick[k]][j]);
    EXPECT_EQ(cut, three[k]);
  }
}

TEST(InterpolatedCircle, L2AgreesWithSpinorialAsMultisets) {
  const auto interp = raqm::interpolated_circle(2);
  const auto spin = raqm::build_spinorial_circle(2);
  // same latitude at m = 1, though the ordered strings differ
  EXPECT_EQ(raqm::ones_fraction(interp[1]), raqm::ones_fraction(spin[1]));
  EXPECT_EQ(interp[1].sorted(), spin[1].sorted());
  EXPECT_NE(interp[1], spin[1]);
}

TEST(LatticeCsv, HeaderAndRows) {
  std::ostringstream os;
  raqm::write_lattice_csv(os, 2);
  EXPECT_EQ(os.str(), "m,n,L,cos_theta,bits\n2,0,2,1,1 1\n1,0,2,0,1 -1\n1,1,2,0,-1 1\n0,0,2,-1,-1 -1\n");
}
