#pragma once

// Minimal complex arithmetic over Real; std::complex is only specified for
// the built-in floating types.

#include "raqm/real.hpp"

namespace raqm {

struct Complex {
  Real re;
  Real im;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return boost::multiprecision::sqrt(norm()); }
};

inline Complex expi(const Real& angle) { return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)}; }
inline Complex expi_turns(const Rational& turns) { return expi(2 * real_pi() * to_real(turns)); }
inline const Complex& imaginary_unit() {
  static const Complex i{Real(0), Real(1)};
  return i;
}

}  // namespace raqm
