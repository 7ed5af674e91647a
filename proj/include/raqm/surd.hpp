#pragma once

/**
 * @file surd.hpp
 * @brief Quadratic surds a + b·√d with a single radical.
 *
 * The radicand is kept as a non-negative integer with small square factors
 * pulled out into b. A surd whose radical vanishes (b = 0, or d a perfect
 * square) is folded into its rational part and stored with b = d = 0, so
 * `is_rational()` is exact.
 *
 * Arithmetic is closed only over a common radicand. Combining two genuine
 * surds with different radicands would need a field tower and throws
 * undecided_representation_error instead.
 */

#include <string>

#include "raqm/errors.hpp"
#include "raqm/rational.hpp"
#include "raqm/real.hpp"

namespace raqm {

class Surd {
 public:
  Surd() = default;
  Surd(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)

  /// a + b·√d for any rational d ≥ 0.
  Surd(Rational a, Rational b, const Rational& d) : a_(std::move(a)), b_(std::move(b)) {
    if (d.sign() < 0) throw std::domain_error("surd with negative radicand " + d.str());
    // √(p/q) = √(p·q) / q
    d_ = d.numerator() * d.denominator();
    b_ /= Rational(d.denominator());
    canonicalize();
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }

  friend Surd operator+(const Surd& x, const Surd& y) {
    if (x.is_rational()) return Surd(x.a_ + y.a_, y.b_, Rational(y.d_));
    if (y.is_rational()) return Surd(x.a_ + y.a_, x.b_, Rational(x.d_));
    Rational yb = coefficient_over(y, x.d_);
    return Surd(x.a_ + y.a_, x.b_ + yb, Rational(x.d_));
  }
  Surd operator-() const {
    Surd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

  friend Surd operator*(const Surd& x, const Surd& y) {
    if (x.is_rational()) return Surd(x.a_ * y.a_, x.a_ * y.b_, Rational(y.d_));
    if (y.is_rational()) return Surd(x.a_ * y.a_, x.b_ * y.a_, Rational(x.d_));
    Rational yb = coefficient_over(y, x.d_);
    Rational d(x.d_);
    return Surd(x.a_ * y.a_ + x.b_ * yb * d, x.a_ * yb + x.b_ * y.a_, d);
  }

  friend bool operator==(const Surd&, const Surd&) = default;

  Real to_real() const {
    Real v = raqm::to_real(a_);
    if (!is_rational()) v += raqm::to_real(b_) * boost::multiprecision::sqrt(Real(d_));
    return v;
  }

  std::string str() const {
    if (is_rational()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str() + (b_.sign() < 0 ? " - " : " + ");
    else if (b_.sign() < 0) s = "-";
    Rational mag = b_.abs();
    if (mag != Rational(1)) s += "(" + mag.str() + ")";
    s += "sqrt(" + d_.str() + ")";
    return s;
  }

 private:
  // Coefficient of y's radical re-expressed over √d: √e = (√(d·e) / d)·√d
  // whenever d·e is a perfect square.
  static Rational coefficient_over(const Surd& y, const BigInt& d) {
    if (y.d_ == d) return y.b_;
    if (auto root = exact_isqrt(d * y.d_)) return y.b_ * Rational(*root, d);
    throw undecided_representation_error("surd arithmetic over sqrt(" + d.str() + ") and sqrt(" +
                                         y.d_.str() + ") needs more than one radical");
  }

  void canonicalize() {
    if (b_.is_zero() || d_ == 0) {
      b_ = Rational();
      d_ = 0;
      return;
    }
    // Pull out small square factors so equal radicals compare equal.
    for (unsigned k = 2; k <= 1000; ++k) {
      BigInt sq = BigInt(k) * k;
      if (sq > d_) break;
      while (d_ % sq == 0) {
        d_ /= sq;
        b_ *= Rational(static_cast<long long>(k));
      }
    }
    if (auto root = exact_isqrt(d_)) {
      a_ += b_ * Rational(*root);
      b_ = Rational();
      d_ = 0;
    }
  }

  Rational a_;
  Rational b_;
  BigInt d_ = 0;
};

}  // namespace raqm
