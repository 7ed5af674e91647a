#pragma once

#include <stdexcept>
#include <string>

namespace raqm {

/// Parameters that cannot be laid out on the L-bit lattice (divisibility,
/// odd length for a singlet, snapping tolerance too tight).
class unrealisable_error : public std::domain_error {
 public:
  explicit unrealisable_error(const std::string& what) : std::domain_error(what) {}
};

/// A value would need more than one quadratic radical to be represented.
class undecided_representation_error : public std::logic_error {
 public:
  explicit undecided_representation_error(const std::string& what) : std::logic_error(what) {}
};

/// Malformed user configuration: bad fraction strings, unknown keys,
/// statistically meaningless trial counts.
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace raqm
