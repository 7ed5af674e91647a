#pragma once

// Umbrella header.

#include "raqm/angle.hpp"
#include "raqm/bell.hpp"
#include "raqm/bitstring.hpp"
#include "raqm/config.hpp"
#include "raqm/errors.hpp"
#include "raqm/hidden_permutation.hpp"
#include "raqm/interference.hpp"
#include "raqm/lattice.hpp"
#include "raqm/niven.hpp"
#include "raqm/noncommutativity.hpp"
#include "raqm/pno.hpp"
#include "raqm/qubit.hpp"
#include "raqm/rational.hpp"
#include "raqm/real.hpp"
#include "raqm/reduction.hpp"
#include "raqm/surd.hpp"
#include "raqm/triangle.hpp"
#include "raqm/uncertainty.hpp"

namespace raqm {
inline constexpr const char* version = "1.0.0";
}
