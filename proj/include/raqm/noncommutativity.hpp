#pragma once

// Nominal settings snapped to the lattice, and the Stern-Gerlach swap test.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "raqm/angle.hpp"
#include "raqm/errors.hpp"
#include "raqm/lattice.hpp"
#include "raqm/rational.hpp"
#include "raqm/real.hpp"
#include "raqm/triangle.hpp"

namespace raqm {

/// An experimenter's chosen direction: a target cosine, the tolerance on
/// cos θ defining its neighbourhood, and the exact lattice point used.
struct NominalSetting {
  double target_cos = 1;
  Rational neighborhood;
  LatticePoint snapped{0, 0, 1};

  Rational exact_cos() const { return snapped.cos_theta(); }
};

/// Nearest lattice latitude cos θ = 2m/L − 1 to `target_cos`. Ties go to the
/// larger m. Fails when the nearest point is further than `epsilon`
/// (default one lattice step, 2/L).
inline NominalSetting snap_to_lattice(double target_cos, std::uint64_t L, std::optional<Rational> epsilon = {}) {
  if (!(std::abs(target_cos) <= 1.0)) throw std::invalid_argument("target cosine outside [-1, 1]");
  if (L < 2) throw std::invalid_argument("snap_to_lattice needs L >= 2");
  const Rational eps = epsilon.value_or(Rational(2, static_cast<long long>(L)));
  const Real target(target_cos);  // exact conversion
  const Real scaled = (target + 1) * Real(L) / 2;
  auto m = static_cast<std::uint64_t>(boost::multiprecision::floor(scaled + Real(0.5)).convert_to<unsigned long long>());
  if (m > L) m = L;
  NominalSetting s{target_cos, eps, LatticePoint(m, 0, L)};
  const Real distance = boost::multiprecision::abs(to_real(s.exact_cos()) - target);
  if (distance > to_real(eps)) {
    throw unrealisable_error("no lattice latitude within " + eps.str() + " of cos = " + std::to_string(target_cos) +
                             " at L=" + std::to_string(L));
  }
  return s;
}

struct SgVerdict {
  Rational cos_ab;
  Rational cos_bc;
  RationalAngle phi_b;
  ItcVerdict verdict;
  /// The world with SG_B and SG_C swapped is simultaneously definable.
  bool swapped_definable = false;
};

/// The triangle at vertex B has sides AB, BC with rational cosines and
/// interior angle φ_B; swapping SG_B and SG_C needs cos θ_AC rational too.
inline SgVerdict sg_counterfactual(const Rational& cos_ab, const Rational& cos_bc, const RationalAngle& phi_b) {
  SgVerdict v{cos_ab, cos_bc, phi_b, itc_verdict(cos_ab, cos_bc, phi_b), false};
  v.swapped_definable = v.verdict.possible;
  return v;
}

inline SgVerdict sg_counterfactual(const NominalSetting& ab, const NominalSetting& bc, const RationalAngle& phi_b) {
  return sg_counterfactual(ab.exact_cos(), bc.exact_cos(), phi_b);
}

}  // namespace raqm
