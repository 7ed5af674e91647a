#pragma once

/**
 * @file pno.hpp
 * @brief Permutation/negation operators on bit strings.
 *
 * An operator is a pair (source, negate): output position k takes the input
 * bit at source[k], sign-flipped when negate[k] is set. Composition and
 * inversion stay inside this representation, so the complex unit and the
 * quaternion units are plain values that can be compared exhaustively.
 */

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "raqm/bitstring.hpp"

namespace raqm {

class Pno {
 public:
  Pno() = default;
  Pno(std::vector<std::size_t> source, std::vector<bool> negate)
      : source_(std::move(source)), negate_(std::move(negate)) {
    if (source_.size() != negate_.size()) throw std::invalid_argument("Pno: mask length mismatch");
    std::vector<bool> seen(source_.size(), false);
    for (auto s : source_) {
      if (s >= source_.size() || seen[s]) throw std::invalid_argument("Pno: source is not a permutation");
      seen[s] = true;
    }
  }
  explicit Pno(std::vector<std::size_t> source)
      : Pno(source, std::vector<bool>(source.size(), false)) {}

  static Pno identity(std::size_t length) {
    std::vector<std::size_t> src(length);
    std::iota(src.begin(), src.end(), std::size_t{0});
    return Pno(std::move(src));
  }
  static Pno negation(std::size_t length) {
    Pno p = identity(length);
    p.negate_.assign(length, true);
    return p;
  }
  /// k-fold cyclic left shift {a1..aL} -> {a(1+k), .., aL, a1, ..}.
  static Pno cyclic_shift(std::size_t length, long long k) {
    if (length == 0) return Pno();
    const auto L = static_cast<long long>(length);
    const long long shift = ((k % L) + L) % L;
    std::vector<std::size_t> src(length);
    for (std::size_t j = 0; j < length; ++j) src[j] = static_cast<std::size_t>((static_cast<long long>(j) + shift) % L);
    return Pno(std::move(src));
  }

  std::size_t size() const { return source_.size(); }
  const std::vector<std::size_t>& source() const { return source_; }
  const std::vector<bool>& negate() const { return negate_; }
  bool is_pure_permutation() const {
    for (bool n : negate_) if (n) return false;
    return true;
  }

  BitString operator()(const BitString& in) const {
    if (in.size() != size()) {
      throw std::invalid_argument("Pno of length " + std::to_string(size()) + " applied to string of length " +
                                  std::to_string(in.size()));
    }
    std::vector<BitString::value_type> out(size());
    for (std::size_t k = 0; k < size(); ++k) {
      int b = in[source_[k]];
      out[k] = static_cast<BitString::value_type>(negate_[k] ? -b : b);
    }
    return BitString(std::move(out));
  }

  /// (f * g)(s) = f(g(s)).
  friend Pno operator*(const Pno& f, const Pno& g) {
    if (f.size() != g.size()) throw std::invalid_argument("Pno composition: length mismatch");
    std::vector<std::size_t> src(f.size());
    std::vector<bool> neg(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      src[k] = g.source_[f.source_[k]];
      neg[k] = f.negate_[k] != g.negate_[f.source_[k]];
    }
    return Pno(std::move(src), std::move(neg));
  }

  Pno inverse() const {
    std::vector<std::size_t> src(size());
    std::vector<bool> neg(size());
    for (std::size_t k = 0; k < size(); ++k) {
      src[source_[k]] = k;
      neg[source_[k]] = negate_[k];
    }
    return Pno(std::move(src), std::move(neg));
  }

  Pno pow(long long k) const {
    Pno base = k < 0 ? inverse() : *this;
    unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
    Pno acc = identity(size());
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Pno&, const Pno&) = default;

 private:
  std::vector<std::size_t> source_;
  std::vector<bool> negate_;
};

namespace pno {

/// i{a1, a2} = {-a2, a1}.
inline const Pno& i() {
  static const Pno op({1, 0}, {true, false});
  return op;
}

enum class Quaternion { I, J, K };

/// I{a} = {a3, a4, -a1, -a2}; J{a} = {a2, -a1, -a4, a3}; K{a} = {-a4, a3, -a2, a1}.
inline const Pno& quaternion(Quaternion which) {
  static const Pno I({2, 3, 0, 1}, {false, false, true, true});
  static const Pno J({1, 0, 3, 2}, {false, true, true, false});
  static const Pno K({3, 2, 1, 0}, {true, false, true, false});
  switch (which) {
    case Quaternion::I: return I;
    case Quaternion::J: return J;
    case Quaternion::K: return K;
  }
  throw std::invalid_argument("unknown quaternion unit");
}

}  // namespace pno

inline BitString apply_i(const BitString& pair) {
  if (pair.size() != 2) throw std::invalid_argument("apply_i needs a 2-bit string");
  return pno::i()(pair);
}

inline BitString quaternion_apply(pno::Quaternion which, const BitString& s) {
  if (s.size() != 4) throw std::invalid_argument("quaternion units act on 4-bit strings");
  return pno::quaternion(which)(s);
}

/// ζ^k: one step is a rotation by 2π/L; k is taken modulo L.
inline BitString zeta(const BitString& s, long long k = 1) {
  return Pno::cyclic_shift(s.size(), k)(s);
}

}  // namespace raqm
