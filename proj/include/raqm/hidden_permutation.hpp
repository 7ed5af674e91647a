#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "raqm/bitstring.hpp"
#include "raqm/pno.hpp"
#include "raqm/random.hpp"

namespace raqm {

/// The hidden permutation ξ of a state: fixed when the system is created,
/// applied to every string of the system alike.
///
/// Seeded permutations are uniform over the symmetric group (Fisher-Yates
/// over a seeded engine) and identical for identical (seed, L).
class HiddenPermutation {
 public:
  static HiddenPermutation from_seed(std::uint64_t seed, std::size_t L) {
    Engine rng(derive_seed(seed, {L}));
    std::vector<std::size_t> src(L);
    for (std::size_t k = 0; k < L; ++k) src[k] = k;
    for (std::size_t k = L; k > 1; --k) std::swap(src[k - 1], src[bounded(rng, k)]);
    return HiddenPermutation(Pno(std::move(src)), seed);
  }
  /// ξ given explicitly: output position k receives input position source[k].
  static HiddenPermutation from_mapping(std::vector<std::size_t> source) {
    return HiddenPermutation(Pno(std::move(source)), std::nullopt);
  }
  static HiddenPermutation identity(std::size_t L) { return HiddenPermutation(Pno::identity(L), std::nullopt); }

  std::size_t size() const { return perm_.size(); }
  const std::optional<std::uint64_t>& seed() const { return seed_; }
  const std::vector<std::size_t>& source() const { return perm_.source(); }
  const Pno& as_pno() const { return perm_; }

  BitString operator()(const BitString& s) const { return perm_(s); }

  friend bool operator==(const HiddenPermutation& a, const HiddenPermutation& b) { return a.perm_ == b.perm_; }

 private:
  HiddenPermutation(Pno p, std::optional<std::uint64_t> seed) : perm_(std::move(p)), seed_(seed) {
    if (!perm_.is_pure_permutation()) throw std::invalid_argument("hidden permutation cannot negate bits");
  }

  Pno perm_;
  std::optional<std::uint64_t> seed_;
};

}  // namespace raqm
