#pragma once

/**
 * @file uncertainty.hpp
 * @brief Spin uncertainty from spherical trigonometry.
 *
 * A point p has colatitudes θ, θ′, θ″ from three orthogonal poles. A bit
 * string at colatitude θ has mean cos θ and standard deviation sin θ, and
 * on the sphere |sin θ′|·|sin θ″| ≥ |cos θ|.
 */

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "raqm/angle.hpp"
#include "raqm/lattice.hpp"
#include "raqm/niven.hpp"
#include "raqm/random.hpp"
#include "raqm/real.hpp"
#include "raqm/triangle.hpp"

namespace raqm {

struct DirectionCosines {
  Real cos_theta;         // from p_z
  Real cos_theta_prime;   // from p_x
  Real cos_theta_dprime;  // from p_y
};

/// Direction cosines of the point with cos θ = `cos_theta` (from p_z) and
/// azimuth `phi` measured from p_x.
inline DirectionCosines direction_from(const Real& cos_theta, const Real& phi_radians) {
  const Real s = boost::multiprecision::sqrt(1 - cos_theta * cos_theta);
  return {cos_theta, s * boost::multiprecision::cos(phi_radians), s * boost::multiprecision::sin(phi_radians)};
}

inline DirectionCosines direction_from(const LatticePoint& p) {
  return direction_from(to_real(p.cos_theta()), 2 * real_pi() * to_real(p.phi().turns()));
}

struct UncertaintyRecord {
  Real sigma_product;  // σ_θ′ · σ_θ″
  Real abs_mean;       // |μ_θ|
  bool holds = false;
  bool equality = false;
  // ħ = 1: ΔS_x·ΔS_y = σσ/4 against (ħ/2)·|S̄_z| = |μ|/4.
  Real delta_sx_delta_sy;
  Real half_hbar_mean_sz;
};

inline UncertaintyRecord uncertainty_check(const DirectionCosines& d) {
  const Real norm = d.cos_theta * d.cos_theta + d.cos_theta_prime * d.cos_theta_prime +
                    d.cos_theta_dprime * d.cos_theta_dprime;
  if (boost::multiprecision::abs(norm - 1) > numeric_tolerance()) {
    throw std::invalid_argument("direction cosines do not have unit squared sum");
  }
  UncertaintyRecord r;
  auto sine = [](const Real& c) {
    const Real s2 = 1 - c * c;
    return s2 > 0 ? Real(boost::multiprecision::sqrt(s2)) : Real(0);
  };
  r.sigma_product = sine(d.cos_theta_prime) * sine(d.cos_theta_dprime);
  r.abs_mean = boost::multiprecision::abs(d.cos_theta);
  r.holds = r.sigma_product >= r.abs_mean - numeric_tolerance();
  r.equality = boost::multiprecision::abs(r.sigma_product - r.abs_mean) <= numeric_tolerance();
  r.delta_sx_delta_sy = r.sigma_product / 4;
  r.half_hbar_mean_sz = r.abs_mean / 4;
  return r;
}

/// Exact cos θ′ = sin θ·cos φ for a point with rational cos θ and rational
/// azimuth φ: the third side of the triangle (p, p_z, p_x).
inline ExactCosine spin_obstruction(const Rational& cos_theta, const RationalAngle& phi) {
  return spherical_third_side(cos_theta, Rational(0), phi);
}

struct AggregateRecord {
  std::uint64_t samples = 0;
  double mean_abs_cos = 0;
  double mean_sigma_sq_prime = 0;
  double mean_sigma_sq_dprime = 0;
  double product_of_means = 0;
  double mean_of_products = 0;
  double mean_mu_sq = 0;
  /// √(mean σ²_θ′)·√(mean σ²_θ″); ħ times this is Δx·Δp.
  double bound = 0;
  bool holds_half = false;
  bool chain_holds = false;
  bool equality = false;
};

struct SampledDirection {
  double cos_theta;
  double phi_radians;
};

inline AggregateRecord position_momentum_aggregate(std::span<const SampledDirection> dirs) {
  if (dirs.empty()) throw std::invalid_argument("aggregate needs at least one direction");
  AggregateRecord r;
  r.samples = dirs.size();
  double abs_cos = 0, s1 = 0, s2 = 0, s12 = 0, mu2 = 0;
  for (const auto& d : dirs) {
    const double sin_theta = std::sqrt(std::max(0.0, 1 - d.cos_theta * d.cos_theta));
    const double cp = sin_theta * std::cos(d.phi_radians);
    const double cpp = sin_theta * std::sin(d.phi_radians);
    const double a = 1 - cp * cp, b = 1 - cpp * cpp;
    abs_cos += std::abs(d.cos_theta);
    s1 += a;
    s2 += b;
    s12 += a * b;
    mu2 += d.cos_theta * d.cos_theta;
  }
  const double n = static_cast<double>(dirs.size());
  r.mean_abs_cos = abs_cos / n;
  r.mean_sigma_sq_prime = s1 / n;
  r.mean_sigma_sq_dprime = s2 / n;
  r.product_of_means = r.mean_sigma_sq_prime * r.mean_sigma_sq_dprime;
  r.mean_of_products = s12 / n;
  r.mean_mu_sq = mu2 / n;
  r.bound = std::sqrt(r.mean_sigma_sq_prime) * std::sqrt(r.mean_sigma_sq_dprime);
  r.holds_half = r.bound >= 0.5;
  constexpr double slack = 1e-12;
  r.chain_holds = r.product_of_means + slack >= r.mean_of_products && r.mean_of_products + slack >= r.mean_mu_sq &&
                  r.bound + slack >= r.mean_abs_cos;
  r.equality = std::abs(r.bound - r.mean_abs_cos) <= slack;
  return r;
}

/// M directions uniform in cos θ and in azimuth, i.e. uniform on the sphere.
inline std::vector<SampledDirection> sample_directions(std::uint64_t count, std::uint64_t seed) {
  Engine rng(derive_seed(seed, {0x756e63ULL}));
  std::vector<SampledDirection> dirs;
  dirs.reserve(count);
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (std::uint64_t k = 0; k < count; ++k) {
    const double c = 2 * uniform01(rng) - 1;
    const double phi = two_pi * uniform01(rng);
    dirs.push_back({c, phi});
  }
  return dirs;
}

inline AggregateRecord position_momentum_aggregate(std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("aggregate needs M >= 1");
  const auto dirs = sample_directions(count, seed);
  return position_momentum_aggregate(std::span<const SampledDirection>(dirs));
}

}  // namespace raqm
