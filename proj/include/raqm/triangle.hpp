#pragma once

/**
 * @file triangle.hpp
 * @brief Exact rationality of the third side of a spherical triangle.
 *
 * Given rational cosines of two sides and the rational interior angle φ_C
 * between them, the spherical cosine rule gives
 *
 *     cos θ_AC = cos θ_AB · cos θ_BC + √r · cos φ_C,
 *     r = (1 − cos²θ_AB)(1 − cos²θ_BC).
 *
 * The result is classified without floating point:
 *   - r = 0: the triangle is degenerate and the side is rational.
 *   - cos φ_C rational: rational iff r·cos²φ_C is a perfect square.
 *   - cos φ_C = ±√e/2 (e ∈ {2, 3}): rational iff r·e is a perfect square.
 *   - otherwise cos 2φ_C is irrational, so √r·cos φ_C cannot be rational and
 *     the side is irrational with 2φ_C as the witness.
 */

#include <string>

#include "raqm/angle.hpp"
#include "raqm/niven.hpp"
#include "raqm/rational.hpp"
#include "raqm/surd.hpp"

namespace raqm {

inline void require_cosine(const Rational& c, const char* name) {
  if (c.abs() > Rational(1)) {
    throw std::domain_error(std::string(name) + " = " + c.str() + " is not a cosine");
  }
}

inline ExactCosine spherical_third_side(const Rational& cos_ab, const Rational& cos_bc,
                                        const RationalAngle& phi_c) {
  require_cosine(cos_ab, "cos_ab");
  require_cosine(cos_bc, "cos_bc");
  const Rational product = cos_ab * cos_bc;
  const Rational r = (Rational(1) - cos_ab.square()) * (Rational(1) - cos_bc.square());
  if (r.is_zero()) return ExactCosine::rational(product);

  const ExactCosine cos_phi = niven_cosine(phi_c);
  if (cos_phi.kind() == ExactCosine::Kind::irrational_by_niven) {
    return ExactCosine::irrational_by_niven(phi_c.doubled());
  }
  if (cos_phi.is_rational()) {
    return ExactCosine::from_surd(Surd(product, cos_phi.value(), r));
  }
  // cos φ_C = c·√e, so √r·cos φ_C = c·√(r·e): still one radical.
  const Surd& s = cos_phi.surd();
  return ExactCosine::from_surd(Surd(product, s.radical_coefficient(), r * Rational(s.radicand())));
}

struct ItcVerdict {
  bool possible = false;
  bool degenerate = false;
  ExactCosine third_side = ExactCosine::rational(0);
  std::string reason;
};

/// Can all three sides have rational cosines with φ_C a rational angle?
inline ItcVerdict itc_verdict(const Rational& cos_ab, const Rational& cos_bc, const RationalAngle& phi_c) {
  ItcVerdict v;
  v.third_side = spherical_third_side(cos_ab, cos_bc, phi_c);
  if (cos_ab.abs() == Rational(1) || cos_bc.abs() == Rational(1)) {
    v.possible = true;
    v.degenerate = true;
    v.reason = "degenerate";
    return v;
  }
  switch (v.third_side.kind()) {
    case ExactCosine::Kind::rational:
      v.possible = true;
      v.reason = "exception: cos(third side) = " + v.third_side.value().str() + " is rational";
      break;
    case ExactCosine::Kind::irrational_surd:
      v.reason = "cos(third side) = " + v.third_side.surd().str() + " is irrational (radicand not a square)";
      break;
    case ExactCosine::Kind::irrational_by_niven:
      v.reason = "cos(2*phi_C) with 2*phi_C = " + v.third_side.witness().str() +
                 " turn is irrational by Niven's theorem, so cos^2(phi_C) and the third side are irrational";
      break;
  }
  return v;
}

}  // namespace raqm
