#pragma once

/**
 * @file interference.hpp
 * @brief Mach-Zehnder definability, delayed choice and the phase-split identities.
 *
 * Inside the interferometer the photon is an equal superposition with a
 * relative phase φ, so its state is defined on the lattice when φ/2π is
 * rational. After the second beamsplitter the squared amplitudes are
 * sin²(φ/2) and cos²(φ/2), rational exactly when cos φ is. For rational
 * φ/2π both hold only on the Niven exception set.
 */

#include <array>
#include <optional>
#include <string>

#include "raqm/angle.hpp"
#include "raqm/complex.hpp"
#include "raqm/niven.hpp"
#include "raqm/rational.hpp"
#include "raqm/real.hpp"

namespace raqm {

struct MZReport {
  RationalAngle phi;
  bool inside_definable = true;
  std::string inside_certificate;
  bool output_definable = false;
  ExactCosine output_certificate = ExactCosine::rational(0);  // cos φ
  /// (P(+1), P(−1)) = (sin²(φ/2), cos²(φ/2)) at 200 bits.
  std::array<Real, 2> output_probabilities;
  /// Exact probabilities when cos φ is rational.
  std::optional<std::array<Rational, 2>> exact_output_probabilities;
  /// Both stages demanded at once and not both satisfiable.
  bool niven_conflict = false;
};

inline MZReport mz_simulate(const RationalAngle& phi) {
  MZReport r;
  r.phi = phi;

  // Input |−1⟩, beamsplitter, phase shifter on the lower arm, beamsplitter.
  const Real h = 1 / boost::multiprecision::sqrt(Real(2));
  const Complex in_up{0, 0}, in_down{1, 0};
  const Complex mid_up = h * (in_up + in_down);
  const Complex mid_down = (h * (in_up - in_down)) * expi_turns(phi.turns());
  const Complex out_up = h * (mid_up + mid_down);
  const Complex out_down = h * (mid_up - mid_down);
  r.output_probabilities = {out_up.norm(), out_down.norm()};

  // Inside: squared amplitudes |mid|² = 1/2 and φ/2π rational by construction.
  r.inside_definable = true;
  r.inside_certificate = "cos^2(theta/2) = 1/2 and phi/2pi = " + phi.str() + " are rational";

  r.output_certificate = niven_cosine(phi);
  r.output_definable = r.output_certificate.is_rational();
  if (r.output_definable) {
    const Rational& c = r.output_certificate.value();
    r.exact_output_probabilities = std::array<Rational, 2>{(Rational(1) - c) / Rational(2), (Rational(1) + c) / Rational(2)};
  }
  r.niven_conflict = !(r.inside_definable && r.output_definable);
  return r;
}

struct DelayedChoiceReport {
  bool second_mirror_in = false;
  std::string demand;
  bool satisfied = false;
  ExactCosine cos_phi = ExactCosine::rational(0);
  std::string explanation;
};

/// With the second mirror in, the output basis needs cos φ ∈ ℚ; with it
/// removed, the which-arm basis needs φ/2π ∈ ℚ.
inline DelayedChoiceReport delayed_choice(const RationalAngle& phi, bool second_mirror_in) {
  DelayedChoiceReport r;
  r.second_mirror_in = second_mirror_in;
  r.cos_phi = niven_cosine(phi);
  if (second_mirror_in) {
    r.demand = "cos(phi) rational";
    r.satisfied = r.cos_phi.is_rational();
    r.explanation = r.satisfied ? "cos(phi) = " + r.cos_phi.value().str()
                                : "cos(phi) is " + r.cos_phi.str() + "; wave-like state undefined";
  } else {
    r.demand = "phi/2pi rational";
    r.satisfied = true;
    r.explanation = "phi/2pi = " + phi.str() + " is rational";
  }
  return r;
}

struct IdentitySplitReport {
  RationalAngle phi_a;
  RationalAngle phi_b;
  Real sum_residual;         // |2cos(Δ/2)e^{iΣ/2} − (e^{iφA} + e^{iφB})|
  Real difference_residual;  // |2i sin(Δ/2)e^{iΣ/2} − (e^{iφA} − e^{iφB})|
  bool identities_hold = false;
  /// cos²((φA − φB)/2) when rational.
  std::optional<Rational> amplitude_sq;
  bool phases_rational = true;
  /// Amplitude and individual phases rational together: a Niven exception.
  bool exception_hit = false;
  /// Amplitude irrational while the phases are rational.
  bool clash = false;
  // Finite-difference reading φA,B = k(x ± Δx): kΔx is the half difference,
  // kx the half sum.
  std::optional<Rational> sin_sq_k_dx;
  std::optional<Rational> sin_sq_kx;
};

namespace detail {
/// sin²(α/2) = (1 − cos α)/2 when cos α is rational.
inline std::optional<Rational> sin_sq_half(const RationalAngle& alpha) {
  ExactCosine c = niven_cosine(alpha);
  if (!c.is_rational()) return std::nullopt;
  return (Rational(1) - c.value()) / Rational(2);
}
inline std::optional<Rational> cos_sq_half(const RationalAngle& alpha) {
  ExactCosine c = niven_cosine(alpha);
  if (!c.is_rational()) return std::nullopt;
  return (Rational(1) + c.value()) / Rational(2);
}
}  // namespace detail

inline IdentitySplitReport identity_split_check(const RationalAngle& phi_a, const RationalAngle& phi_b) {
  IdentitySplitReport r;
  r.phi_a = phi_a;
  r.phi_b = phi_b;
  const Real a = 2 * real_pi() * to_real(phi_a.turns());
  const Real b = 2 * real_pi() * to_real(phi_b.turns());
  const Complex ea = expi(a), eb = expi(b), mean_phase = expi((a + b) / 2);
  const Complex sum_lhs = (2 * boost::multiprecision::cos((a - b) / 2)) * mean_phase;
  const Complex diff_lhs = imaginary_unit() * ((2 * boost::multiprecision::sin((a - b) / 2)) * mean_phase);
  r.sum_residual = (sum_lhs - (ea + eb)).abs();
  r.difference_residual = (diff_lhs - (ea - eb)).abs();
  r.identities_hold = r.sum_residual <= numeric_tolerance() && r.difference_residual <= numeric_tolerance();

  r.amplitude_sq = detail::cos_sq_half(phi_a - phi_b);
  r.exception_hit = r.amplitude_sq.has_value() && r.phases_rational;
  r.clash = !r.amplitude_sq.has_value() && r.phases_rational;
  r.sin_sq_k_dx = detail::sin_sq_half(phi_a - phi_b);
  r.sin_sq_kx = detail::sin_sq_half(phi_a + phi_b);
  return r;
}

}  // namespace raqm
