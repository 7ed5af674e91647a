#pragma once

/**
 * @file qubit.hpp
 * @brief One- and two-qubit states as L-bit strings with a hidden permutation.
 *
 * A two-qubit state is described by three Bloch points given as lattice
 * fractions: (θ₁, φ₁) for qubit A, and (θ₂, φ₂), (θ₃, φ₃) for qubit B
 * conditioned on A = +1 and A = −1. Before ξ is applied the A string is the
 * (θ₁) block; B carries a (θ₂, φ₂) block under A's +1 positions and a
 * (θ₃, φ₃) block under A's −1 positions, each phase being a cyclic shift
 * inside its own sub-block. φ₁ rotates both strings together, which keeps
 * the conditional fractions intact. ξ then permutes both strings alike.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "raqm/bitstring.hpp"
#include "raqm/errors.hpp"
#include "raqm/hidden_permutation.hpp"
#include "raqm/lattice.hpp"
#include "raqm/pno.hpp"
#include "raqm/rational.hpp"

namespace raqm {

struct QubitState {
  LatticePoint point;
  HiddenPermutation xi;
  BitString string;

  /// Representative of the ξ-equivalence class (all +1s first).
  BitString class_representative() const { return string.sorted(); }
};

inline QubitState make_qubit(const LatticePoint& point, const HiddenPermutation& xi) {
  if (xi.size() != point.L()) {
    throw std::invalid_argument("hidden permutation of length " + std::to_string(xi.size()) +
                                " for a lattice with L=" + std::to_string(point.L()));
  }
  return QubitState{point, xi, xi(canonical_bitstring(point))};
}

/// Real degrees of freedom of an N-qubit state: 2^(N+1) − 2.
inline std::uint64_t dof(unsigned qubits) {
  if (qubits < 1 || qubits > 62) throw std::out_of_range("dof: qubit count must be in [1, 62]");
  return (std::uint64_t{1} << (qubits + 1)) - 2;
}

/// A Bloch point as lattice fractions: cos²(θ/2) and φ/2π.
struct BlochFraction {
  Rational ones;
  Rational turns;
  friend bool operator==(const BlochFraction&, const BlochFraction&) = default;
};

struct TwoQubitParams {
  BlochFraction a;          // (θ₁, φ₁)
  BlochFraction b_if_up;    // (θ₂, φ₂)
  BlochFraction b_if_down;  // (θ₃, φ₃)
  friend bool operator==(const TwoQubitParams&, const TwoQubitParams&) = default;
};

struct TwoQubitState {
  std::uint64_t L = 0;
  TwoQubitParams params;
  HiddenPermutation xi = HiddenPermutation::identity(0);
  BitString top;
  BitString bottom;
  /// cos θ_AB when the state was built as a singlet.
  std::optional<Rational> singlet_cos;
};

namespace detail {

inline std::uint64_t lattice_count(const Rational& fraction, std::uint64_t length, const std::string& what) {
  if (fraction.sign() < 0) throw unrealisable_error(what + " = " + fraction.str() + " is negative");
  Rational count = fraction * Rational(static_cast<long long>(length));
  if (!count.is_integer()) {
    throw unrealisable_error("lattice-unrealisable parameters: " + what + " = " + fraction.str() +
                             " times block length " + std::to_string(length) + " is not an integer");
  }
  return static_cast<std::uint64_t>(count.numerator());
}

inline BitString sub_block(const BlochFraction& f, std::uint64_t length, const std::string& name) {
  if (f.ones > Rational(1)) throw unrealisable_error(name + " ones fraction " + f.ones.str() + " exceeds 1");
  const std::uint64_t ones = lattice_count(f.ones, length, "cos^2(" + name + "/2)");
  const std::uint64_t shift = lattice_count(f.turns.fractional(), length, "phase of " + name);
  return zeta(BitString::block(ones, length), static_cast<long long>(shift));
}

struct Layout {
  BitString top;
  BitString bottom;
};

/// The unpermuted strings for a parameter set.
inline Layout layout(const TwoQubitParams& p, std::uint64_t L) {
  if (p.a.ones > Rational(1)) throw unrealisable_error("cos^2(theta1/2) exceeds 1");
  const std::uint64_t m1 = lattice_count(p.a.ones, L, "cos^2(theta1/2)");
  const std::uint64_t n1 = lattice_count(p.a.turns.fractional(), L, "phi1");
  BitString top = BitString::block(m1, L);
  BitString bottom = sub_block(p.b_if_up, m1, "theta2") + sub_block(p.b_if_down, L - m1, "theta3");
  return {zeta(top, static_cast<long long>(n1)), zeta(bottom, static_cast<long long>(n1))};
}

}  // namespace detail

inline TwoQubitState make_two_qubit(const TwoQubitParams& params, std::uint64_t L, const HiddenPermutation& xi) {
  if (L == 0) throw std::invalid_argument("L must be positive");
  if (xi.size() != L) {
    throw std::invalid_argument("hidden permutation of length " + std::to_string(xi.size()) + " for L=" +
                                std::to_string(L));
  }
  detail::Layout u = detail::layout(params, L);
  return TwoQubitState{L, params, xi, xi(u.top), xi(u.bottom), std::nullopt};
}

/// Singlet parameters at relative analyser angle θ_AB: A is the (π/2, 0)
/// block, B carries colatitude π − θ_AB under A = +1 and θ_AB under A = −1.
inline TwoQubitParams singlet_params(const Rational& cos_theta_ab) {
  if (cos_theta_ab.abs() > Rational(1)) throw unrealisable_error("cos theta_AB = " + cos_theta_ab.str() + " is not a cosine");
  const Rational sin_sq_half = (Rational(1) - cos_theta_ab) / Rational(2);
  const Rational cos_sq_half = (Rational(1) + cos_theta_ab) / Rational(2);
  return TwoQubitParams{{Rational(1, 2), Rational(0)}, {sin_sq_half, Rational(0)}, {cos_sq_half, Rational(0)}};
}

inline TwoQubitState make_singlet(const Rational& cos_theta_ab, std::uint64_t L, const HiddenPermutation& xi) {
  if (L % 2 != 0) throw unrealisable_error("singlet needs even L, got L=" + std::to_string(L));
  TwoQubitState s = make_two_qubit(singlet_params(cos_theta_ab), L, xi);
  s.singlet_cos = cos_theta_ab;
  return s;
}

/// Re-presents the state with the two strings exchanged.
///
/// The new parameters are read off the joint (top, bottom) counts of the
/// ordered strings, and ξ′ is found by matching each position of the new
/// unpermuted layout to a position with the same joint outcome pair. The
/// returned strings are the input's (bottom, top) exactly.
inline TwoQubitState swap_perspective(const TwoQubitState& s) {
  const std::uint64_t L = s.L;
  // counts[(new_top, new_bottom)] with +1 -> index 0, -1 -> index 1
  std::uint64_t counts[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t k = 0; k < L; ++k) ++counts[s.bottom[k] > 0 ? 0 : 1][s.top[k] > 0 ? 0 : 1];
  const std::uint64_t up = counts[0][0] + counts[0][1];
  const std::uint64_t down = counts[1][0] + counts[1][1];
  auto frac = [](std::uint64_t n, std::uint64_t d) {
    return d == 0 ? Rational(0) : Rational(static_cast<long long>(n), static_cast<long long>(d));
  };
  TwoQubitParams swapped{{frac(up, L), Rational(0)},
                         {frac(counts[0][0], up), Rational(0)},
                         {frac(counts[1][0], down), Rational(0)}};
  detail::Layout u = detail::layout(swapped, L);

  std::vector<std::size_t> pool[2][2];
  for (std::size_t k = 0; k < L; ++k) pool[u.top[k] > 0 ? 0 : 1][u.bottom[k] > 0 ? 0 : 1].push_back(k);
  std::size_t next[2][2] = {{0, 0}, {0, 0}};
  std::vector<std::size_t> source(L);
  for (std::size_t j = 0; j < L; ++j) {
    const int a = s.bottom[j] > 0 ? 0 : 1;
    const int b = s.top[j] > 0 ? 0 : 1;
    if (next[a][b] >= pool[a][b].size()) throw std::logic_error("swap_perspective: no matching xi' exists");
    source[j] = pool[a][b][next[a][b]++];
  }
  HiddenPermutation xi_prime = HiddenPermutation::from_mapping(std::move(source));
  TwoQubitState out{L, swapped, xi_prime, xi_prime(u.top), xi_prime(u.bottom), s.singlet_cos};
  if (out.top != s.bottom || out.bottom != s.top) throw std::logic_error("swap_perspective: xi' does not reproduce the strings");
  return out;
}

/// Rebuilds the bottom string for new conditional settings under the same ξ.
/// The top string is guaranteed bit-identical.
inline TwoQubitState counterfactual_setting_change(const TwoQubitState& s, const BlochFraction& b_if_up,
                                                   const BlochFraction& b_if_down) {
  TwoQubitParams p = s.params;
  p.b_if_up = b_if_up;
  p.b_if_down = b_if_down;
  TwoQubitState out = make_two_qubit(p, s.L, s.xi);
  out.singlet_cos.reset();
  if (out.top != s.top) throw std::logic_error("counterfactual setting change altered the other party's string");
  return out;
}

/// Singlet form: the other party moves to a new relative angle.
inline TwoQubitState counterfactual_setting_change(const TwoQubitState& s, const Rational& new_cos_theta_ab) {
  const TwoQubitParams target = singlet_params(new_cos_theta_ab);
  if (s.params.a != target.a) throw std::invalid_argument("singlet setting change on a non-singlet layout");
  TwoQubitState out = counterfactual_setting_change(s, target.b_if_up, target.b_if_down);
  out.singlet_cos = new_cos_theta_ab;
  return out;
}

}  // namespace raqm
