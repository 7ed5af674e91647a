#pragma once

// 200-bit binary floating point used for numeric cross-checks of exact results.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "raqm/rational.hpp"

namespace raqm {

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

/// Agreement threshold for numeric checks of exact identities: 2^-150.
inline const Real& numeric_tolerance() {
  static const Real tol = boost::multiprecision::ldexp(Real(1), -150);
  return tol;
}

inline const Real& real_pi() {
  static const Real pi = boost::math::constants::pi<Real>();
  return pi;
}

inline Real to_real(const Rational& r) { return r.to<Real>(); }

/// cos(2π·turns) at 200 bits.
inline Real cos_turns(const Rational& turns) {
  return boost::multiprecision::cos(2 * real_pi() * to_real(turns));
}

inline Real sin_turns(const Rational& turns) {
  return boost::multiprecision::sin(2 * real_pi() * to_real(turns));
}

}  // namespace raqm
