#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "raqm/rational.hpp"

namespace raqm {

/// An ordered string of L entries, each +1 or −1.
class BitString {
 public:
  using value_type = std::int8_t;

  BitString() = default;
  BitString(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) push_back(b);
  }
  explicit BitString(std::vector<value_type> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) check(b);
  }
  /// m leading +1s followed by L − m trailing −1s.
  static BitString block(std::size_t ones, std::size_t length) {
    if (ones > length) throw std::out_of_range("block: more ones than bits");
    std::vector<value_type> v(length, -1);
    std::fill_n(v.begin(), ones, value_type{1});
    return BitString(std::move(v), unchecked{});
  }
  static BitString filled(std::size_t length, int value) {
    check(value);
    return BitString(std::vector<value_type>(length, static_cast<value_type>(value)), unchecked{});
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  int at(std::size_t i) const { return bits_.at(i); }
  void set(std::size_t i, int value) {
    check(value);
    bits_.at(i) = static_cast<value_type>(value);
  }
  void push_back(int value) {
    check(value);
    bits_.push_back(static_cast<value_type>(value));
  }

  std::span<const value_type> bits() const { return bits_; }
  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }

  std::size_t ones_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), value_type{1}));
  }

  BitString negated() const {
    BitString r = *this;
    for (auto& b : r.bits_) b = static_cast<value_type>(-b);
    return r;
  }

  /// Representative of the equivalence class under permutations: +1s first.
  BitString sorted() const {
    return block(ones_count(), size());
  }

  friend BitString operator+(const BitString& a, const BitString& b) {
    BitString r = a;
    r.bits_.insert(r.bits_.end(), b.bits_.begin(), b.bits_.end());
    return r;
  }
  friend bool operator==(const BitString&, const BitString&) = default;

  /// "{1,-1,-1,1}"
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (i) s += ',';
      s += bits_[i] > 0 ? "1" : "-1";
    }
    return s + "}";
  }
  /// Space separated, for CSV cells: "1 -1 -1 1".
  std::string list() const {
    std::string s;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (i) s += ' ';
      s += bits_[i] > 0 ? "1" : "-1";
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const BitString& s) { return os << s.str(); }

 private:
  struct unchecked {};
  BitString(std::vector<value_type> bits, unchecked) : bits_(std::move(bits)) {}

  static void check(int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("bit must be +1 or -1");
  }

  std::vector<value_type> bits_;
};

/// Exact fraction of +1 entries.
inline Rational ones_fraction(const BitString& s) {
  if (s.empty()) throw std::invalid_argument("ones_fraction of an empty string");
  return Rational(static_cast<long long>(s.ones_count()), static_cast<long long>(s.size()));
}

}  // namespace raqm
