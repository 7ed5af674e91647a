#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "raqm/rational.hpp"

namespace raqm {

/// An angle stored as an exact fraction of a full turn, φ/2π ∈ [0, 1).
///
/// Construction reduces the fraction modulo one turn, so arithmetic on
/// angles (doubling, differences) never leaves the canonical range.
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(const Rational& turns) : turns_(turns.fractional()) {}
  RationalAngle(long long n, long long d) : RationalAngle(Rational(n, d)) {}

  static RationalAngle parse(std::string_view text) { return RationalAngle(Rational::parse(text)); }

  const Rational& turns() const { return turns_; }
  const BigInt& reduced_denominator() const { return turns_.denominator(); }

  RationalAngle doubled() const { return RationalAngle(turns_ * 2); }
  RationalAngle negated() const { return RationalAngle(-turns_); }

  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.turns_ + b.turns_);
  }
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.turns_ - b.turns_);
  }
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

  std::string str() const { return turns_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const RationalAngle& a) {
    return os << a.str() << " turn";
  }

 private:
  Rational turns_;
};

}  // namespace raqm
