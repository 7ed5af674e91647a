#pragma once

/**
 * @file niven.hpp
 * @brief Exact cosines of rational angles, classified by Niven's theorem.
 *
 * For φ = 2π·n/d with n/d reduced, cos φ is rational exactly when
 * d ∈ {1, 2, 3, 4, 6}. For d ∈ {8, 12} the cosine is a single quadratic surd
 * (±√2/2, ±√3/2) and cos²φ is still rational. Every other denominator gives
 * an irrational cosine; we return the angle itself as the certificate.
 */

#include <optional>
#include <string>
#include <variant>

#include "raqm/angle.hpp"
#include "raqm/rational.hpp"
#include "raqm/surd.hpp"

namespace raqm {

/// Certificate that cos(witness) is irrational: the witness's reduced
/// turn-denominator lies outside {1, 2, 3, 4, 6}.
struct IrrationalByNiven {
  RationalAngle witness;
  friend bool operator==(const IrrationalByNiven&, const IrrationalByNiven&) = default;
};

/// A real number known exactly, or known to be irrational with a reason.
class ExactCosine {
 public:
  enum class Kind { rational, irrational_surd, irrational_by_niven };

  static ExactCosine rational(Rational v) { return ExactCosine(std::move(v)); }
  static ExactCosine irrational_surd(Surd s) {
    if (s.is_rational()) return ExactCosine(s.rational_part());
    return ExactCosine(std::move(s));
  }
  static ExactCosine irrational_by_niven(RationalAngle witness) {
    return ExactCosine(IrrationalByNiven{std::move(witness)});
  }
  /// Folds a surd into the rational kind when its radical vanishes.
  static ExactCosine from_surd(Surd s) { return irrational_surd(std::move(s)); }

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_rational() const { return kind() == Kind::rational; }

  const Rational& value() const { return std::get<Rational>(value_); }
  const Surd& surd() const { return std::get<Surd>(value_); }
  const RationalAngle& witness() const { return std::get<IrrationalByNiven>(value_).witness; }

  /// Exact value as a surd when one is known (rational or surd kinds).
  std::optional<Surd> exact() const {
    if (is_rational()) return Surd(value());
    if (kind() == Kind::irrational_surd) return surd();
    return std::nullopt;
  }

  std::string kind_name() const {
    switch (kind()) {
      case Kind::rational: return "rational";
      case Kind::irrational_surd: return "irrational_surd";
      case Kind::irrational_by_niven: return "irrational_by_niven";
    }
    return "?";
  }

  std::string str() const {
    switch (kind()) {
      case Kind::rational: return value().str();
      case Kind::irrational_surd: return surd().str();
      case Kind::irrational_by_niven: return "irrational (cos of " + witness().str() + " turn, Niven)";
    }
    return "?";
  }

  friend bool operator==(const ExactCosine&, const ExactCosine&) = default;

 private:
  explicit ExactCosine(std::variant<Rational, Surd, IrrationalByNiven> v) : value_(std::move(v)) {}

  std::variant<Rational, Surd, IrrationalByNiven> value_;
};

/// True iff cos(2π·k/d) is rational for reduced k/d.
inline bool niven_rational_denominator(const BigInt& d) {
  return d == 1 || d == 2 || d == 3 || d == 4 || d == 6;
}

/// True iff cos² of an angle with this reduced denominator is rational.
inline bool niven_rational_square_denominator(const BigInt& d) {
  return niven_rational_denominator(d) || d == 8 || d == 12;
}

inline ExactCosine niven_cosine(const RationalAngle& angle) {
  const BigInt& d = angle.reduced_denominator();
  const BigInt& n = angle.turns().numerator();
  if (d == 1) return ExactCosine::rational(1);
  if (d == 2) return ExactCosine::rational(-1);
  if (d == 3) return ExactCosine::rational(Rational(-1, 2));
  if (d == 4) return ExactCosine::rational(0);
  if (d == 6) return ExactCosine::rational(Rational(1, 2));
  if (d == 8 || d == 12) {
    // Quadrants I and IV are positive: n/d < 1/4 or n/d > 3/4.
    bool positive = 4 * n < d || 4 * n > 3 * d;
    Rational half(positive ? 1 : -1, 2);
    return ExactCosine::irrational_surd(Surd(0, half, Rational(d == 8 ? 2 : 3)));
  }
  return ExactCosine::irrational_by_niven(angle);
}

/// cos²φ when rational, via (1 + cos 2φ)/2.
inline std::optional<Rational> cos_squared(const RationalAngle& angle) {
  ExactCosine c2 = niven_cosine(angle.doubled());
  if (!c2.is_rational()) return std::nullopt;
  return (Rational(1) + c2.value()) / Rational(2);
}

/// Re-checks the certificate carried by an ExactCosine.
inline bool certificate_valid(const ExactCosine& c) {
  switch (c.kind()) {
    case ExactCosine::Kind::rational:
      return true;
    case ExactCosine::Kind::irrational_surd: {
      const Surd& s = c.surd();
      return !s.radical_coefficient().is_zero() && !exact_isqrt(s.radicand()).has_value();
    }
    case ExactCosine::Kind::irrational_by_niven:
      return !niven_rational_denominator(c.witness().reduced_denominator());
  }
  return false;
}

}  // namespace raqm
