#pragma once

/**
 * @file lattice.hpp
 * @brief The discretised Riemann sphere at granularity L.
 *
 * A point is labelled by integers (m, n) with cos²(θ/2) = m/L and
 * φ/2π = n/L. Its bit string is the block of m leading +1s and L − m
 * trailing −1s, cyclically shifted n times. At the poles (m = 0 or m = L)
 * the longitude is meaningless and n is identified with 0.
 */

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "raqm/angle.hpp"
#include "raqm/bitstring.hpp"
#include "raqm/pno.hpp"
#include "raqm/rational.hpp"

namespace raqm {

class LatticePoint {
 public:
  LatticePoint(std::uint64_t m, std::uint64_t n, std::uint64_t L) : m_(m), n_(n), L_(L) {
    if (L == 0) throw std::invalid_argument("lattice granularity L must be positive");
    if (m > L) throw std::out_of_range("lattice point m=" + std::to_string(m) + " exceeds L=" + std::to_string(L));
    if (n >= L) throw std::out_of_range("lattice point n=" + std::to_string(n) + " must be below L=" + std::to_string(L));
    if (is_pole()) n_ = 0;
  }

  std::uint64_t m() const { return m_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t L() const { return L_; }
  bool is_pole() const { return m_ == 0 || m_ == L_; }

  /// cos²(θ/2) = m/L.
  Rational cos_sq_half_theta() const { return Rational(static_cast<long long>(m_), static_cast<long long>(L_)); }
  /// cos θ = 2m/L − 1.
  Rational cos_theta() const { return Rational(2) * cos_sq_half_theta() - Rational(1); }
  RationalAngle phi() const { return RationalAngle(static_cast<long long>(n_), static_cast<long long>(L_)); }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::uint64_t m_;
  std::uint64_t n_;
  std::uint64_t L_;
};

inline BitString canonical_bitstring(const LatticePoint& p) {
  return zeta(BitString::block(p.m(), p.L()), static_cast<long long>(p.n()));
}

/// All distinct points: two poles plus (L − 1)·L interior points.
inline std::vector<LatticePoint> enumerate_sphere(std::uint64_t L) {
  std::vector<LatticePoint> pts;
  pts.emplace_back(L, 0, L);
  for (std::uint64_t m = L - 1; m >= 1; --m) {
    for (std::uint64_t n = 0; n < L; ++n) pts.emplace_back(m, n, L);
  }
  pts.emplace_back(0, 0, L);
  return pts;
}

/// cos θ of the point a string represents: 2·ones_fraction − 1.
inline Rational latitude_cos(const BitString& s) { return Rational(2) * ones_fraction(s) - Rational(1); }

inline bool is_power_of_two(std::uint64_t L) { return L != 0 && (L & (L - 1)) == 0; }

/// The 2L strings on the φ ∈ {0, π} great circle for L = 2^M, M ≥ 1.
///
/// L = 2 is i^k{1,1}, k = 0..3. For larger L the string is split into two
/// halves, each walking the L/2 circle: the second half steps forward L/2
/// times, then the first half steps backward L/2 times, and the pair of
/// moves repeats, so the first half ends rotated by 4π relative to the
/// second.
inline std::vector<BitString> build_spinorial_circle(std::uint64_t L) {
  if (L < 2 || !is_power_of_two(L)) {
    throw std::invalid_argument("spinorial circle needs L = 2^M with M >= 1, got L=" + std::to_string(L));
  }
  if (L == 2) {
    std::vector<BitString> circle;
    Pno step = Pno::identity(2);
    for (int k = 0; k < 4; ++k) {
      circle.push_back(step(BitString{1, 1}));
      step = pno::i() * step;
    }
    return circle;
  }
  const std::vector<BitString> half = build_spinorial_circle(L / 2);
  const std::size_t period = half.size();  // = L
  const std::size_t steps = static_cast<std::size_t>(L / 2);
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<BitString> circle;
  circle.reserve(2 * L);
  circle.push_back(half[first] + half[second]);
  for (int phase = 0; phase < 4; ++phase) {
    for (std::size_t s = 0; s < steps; ++s) {
      if (phase % 2 == 0) second = (second + 1) % period;
      else first = (first + period - 1) % period;
      if (circle.size() < 2 * L) circle.push_back(half[first] + half[second]);
    }
  }
  return circle;
}

/// Block strings with m = L, L−1, ..., 0 on the φ = 0 meridian. Used for
/// granularities where no spinorial tower is defined.
inline std::vector<BitString> interpolated_circle(std::uint64_t L) {
  if (L < 1) throw std::invalid_argument("interpolated circle needs L >= 1");
  std::vector<BitString> out;
  out.reserve(L + 1);
  for (std::uint64_t m = L + 1; m-- > 0;) out.push_back(BitString::block(m, L));
  return out;
}

/// CSV dump of every lattice point: m,n,L,cos_theta,bits.
inline void write_lattice_csv(std::ostream& os, std::uint64_t L) {
  os << "m,n,L,cos_theta,bits\n";
  for (const auto& p : enumerate_sphere(L)) {
    os << p.m() << ',' << p.n() << ',' << p.L() << ',' << p.cos_theta().str() << ','
       << canonical_bitstring(p).list() << '\n';
  }
}

}  // namespace raqm
