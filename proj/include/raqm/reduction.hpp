#pragma once

/**
 * @file reduction.hpp
 * @brief Integer-pair form of a state and the halving reduction dynamics.
 *
 * A bit string is read as two bitwise complementary base-2 integers: `plus`
 * has a 1 wherever the string has +1, `minus` wherever it has −1. String
 * position 1 is the most significant digit, so {1,−1,−1,1} is 1001. − 0110.
 *
 * One reduction step halves both integers, dropping the least significant
 * digit. After L − 1 steps a single digit survives; it is the most
 * significant digit of the original, i.e. the first bit of the ξ-permuted
 * string, and its sign is the measurement outcome.
 */

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "raqm/bitstring.hpp"
#include "raqm/rational.hpp"

namespace raqm {

struct IntegerPair {
  BigInt plus;
  BigInt minus;
  std::size_t width = 0;

  /// Base-2 digits of `plus`, most significant first, zero-padded to width.
  std::string plus_bits() const { return digits(plus); }
  std::string minus_bits() const { return digits(minus); }

  /// "1001.-0110."; a fully reduced pair prints its outcome, "1." or "-1.".
  std::string str() const {
    if (width == 1) return plus == 1 ? "1." : "-1.";
    return plus_bits() + ".-" + minus_bits() + ".";
  }

  bool complementary() const {
    const BigInt mask = (BigInt(1) << width) - 1;
    return (plus ^ minus) == mask && (plus & minus) == 0;
  }

  friend bool operator==(const IntegerPair&, const IntegerPair&) = default;

 private:
  std::string digits(const BigInt& v) const {
    std::string s(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
      if (boost::multiprecision::bit_test(v, static_cast<unsigned>(width - 1 - k))) s[k] = '1';
    }
    return s;
  }
};

inline IntegerPair to_integer_pair(const BitString& s) {
  IntegerPair p{0, 0, s.size()};
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto bit = static_cast<unsigned>(s.size() - 1 - k);
    if (s[k] > 0) boost::multiprecision::bit_set(p.plus, bit);
    else boost::multiprecision::bit_set(p.minus, bit);
  }
  return p;
}

inline BitString from_integer_pair(const IntegerPair& p) {
  if (!p.complementary()) throw std::invalid_argument("integer pair is not bitwise complementary");
  BitString s;
  for (std::size_t k = 0; k < p.width; ++k) {
    s.push_back(boost::multiprecision::bit_test(p.plus, static_cast<unsigned>(p.width - 1 - k)) ? 1 : -1);
  }
  return s;
}

inline IntegerPair reduce_step(const IntegerPair& p) {
  if (p.width < 2) throw std::logic_error("state already reduced to a single digit");
  return IntegerPair{p.plus >> 1, p.minus >> 1, p.width - 1};
}

struct ReductionTrace {
  std::vector<IntegerPair> steps;  // steps[0] is the initial pair
  int outcome = 0;
  std::size_t step_count = 0;
};

inline ReductionTrace measure(const BitString& s) {
  if (s.empty()) throw std::invalid_argument("cannot measure an empty string");
  ReductionTrace t;
  t.steps.push_back(to_integer_pair(s));
  while (t.steps.back().width > 1) t.steps.push_back(reduce_step(t.steps.back()));
  t.step_count = t.steps.size() - 1;
  t.outcome = t.steps.back().plus == 1 ? 1 : -1;
  return t;
}

/// Outcome of `measure` without building the trace: the most significant
/// digit survives, which is string position 1.
inline int measured_bit(const BitString& s) {
  if (s.empty()) throw std::invalid_argument("cannot measure an empty string");
  return s[0];
}

/// 2^(−v) with v the 2-adic valuation of a − b; 0 when a = b.
inline Rational two_adic_distance(const BigInt& a, const BigInt& b) {
  BigInt diff = a - b;
  if (diff == 0) return Rational(0);
  if (diff < 0) diff = -diff;
  const unsigned v = boost::multiprecision::lsb(diff);
  return Rational(BigInt(1), BigInt(1) << v);
}

}  // namespace raqm
