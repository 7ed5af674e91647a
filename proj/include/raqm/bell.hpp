#pragma once

/**
 * @file bell.hpp
 * @brief Bell-inequality harness over bit-string singlets.
 *
 * Each of the three correlations is estimated on its own sub-ensemble. A
 * trial draws ξ from the seed schedule (seed, pair, trial), builds the
 * singlet at the snapped relative angle, and reads both outcomes at the
 * position ξ sends to the most significant digit. Only integer tallies are
 * kept, so results do not depend on how trials are split across workers.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "raqm/angle.hpp"
#include "raqm/errors.hpp"
#include "raqm/hidden_permutation.hpp"
#include "raqm/noncommutativity.hpp"
#include "raqm/qubit.hpp"
#include "raqm/random.hpp"
#include "raqm/rational.hpp"
#include "raqm/real.hpp"
#include "raqm/reduction.hpp"
#include "raqm/triangle.hpp"

namespace raqm {

struct BellConfig {
  std::array<RationalAngle, 3> nominal;  // A, B, C as turns in a common plane
  std::uint64_t L = 360;
  std::uint64_t trials_per_pair = 100000;
  std::uint64_t seed = 0;
  /// Tolerance on cos θ for snapping; defaults to 2/L.
  std::optional<Rational> tolerance;
  unsigned workers = 1;
};

inline constexpr std::uint64_t min_bell_trials = 100;

struct PairStats {
  std::string label;
  Rational relative_turns;  // nominal relative angle in [0, 1/2]
  double nominal_cos = 0;
  NominalSetting snapped;   // on the half-string lattice L/2
  Rational exact_cos;       // cos θ of the simulated singlet
  std::uint64_t trials = 0;
  std::int64_t product_sum = 0;
  double correlation = 0;
  double std_error = 0;      // √((1 − Co²)/N)
  double predicted_exact = 0;    // −cos θ (snapped)
  double predicted_nominal = 0;  // −cos θ (nominal)
  /// (Co − predicted_exact) in units of the expected binomial error; 0 when
  /// the prediction is ±1 and matched on every trial.
  double z_score = 0;
};

struct BellReport {
  BellConfig config;
  std::array<PairStats, 3> pairs;  // AB, AC, BC
  double bell_quantity = 0;        // |Co(A,B) − Co(A,C)| − Co(B,C)
  double bell_quantity_std_error = 0;
  double predicted_nominal_quantity = 0;
  double predicted_exact_quantity = 0;
  bool violates = false;           // quantity > 1
};

/// Relative angle between two coplanar directions, folded into [0, 1/2] turn.
inline Rational relative_turns(const RationalAngle& x, const RationalAngle& y) {
  Rational d = (x - y).turns();
  if (d > Rational(1, 2)) d = Rational(1) - d;
  return d;
}

namespace detail {

struct Tally {
  std::uint64_t trials = 0;
  std::int64_t product_sum = 0;
};

inline Tally run_trials(const Rational& cos_ab, std::uint64_t L, std::uint64_t seed, std::uint64_t pair,
                        std::uint64_t first, std::uint64_t last) {
  Tally t;
  for (std::uint64_t k = first; k < last; ++k) {
    const auto xi = HiddenPermutation::from_seed(derive_seed(seed, {pair, k}), L);
    const TwoQubitState s = make_singlet(cos_ab, L, xi);
    t.product_sum += measured_bit(s.top) * measured_bit(s.bottom);
    ++t.trials;
  }
  return t;
}

inline Tally run_pair(const Rational& cos_ab, const BellConfig& cfg, std::uint64_t pair) {
  const unsigned workers = std::max(1u, cfg.workers);
  const std::uint64_t n = cfg.trials_per_pair;
  if (workers == 1) return run_trials(cos_ab, cfg.L, cfg.seed, pair, 0, n);
  std::vector<Tally> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = n * w / workers, hi = n * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { parts[w] = run_trials(cos_ab, cfg.L, cfg.seed, pair, lo, hi); });
    }
  }
  Tally total;
  for (const auto& p : parts) {
    total.trials += p.trials;
    total.product_sum += p.product_sum;
  }
  return total;
}

}  // namespace detail

inline BellReport bell_run(const BellConfig& cfg) {
  if (cfg.trials_per_pair < min_bell_trials) {
    throw config_error("bell_run needs at least " + std::to_string(min_bell_trials) + " trials per pair");
  }
  if (cfg.L < 2 || cfg.L % 2 != 0) throw unrealisable_error("singlet strings need even L >= 2, got L=" + std::to_string(cfg.L));

  BellReport rep;
  rep.config = cfg;
  const Rational tol = cfg.tolerance.value_or(Rational(2, static_cast<long long>(cfg.L)));
  static constexpr std::array<std::array<int, 2>, 3> idx{{{0, 1}, {0, 2}, {1, 2}}};
  static constexpr std::array<const char*, 3> labels{"AB", "AC", "BC"};
  for (std::size_t p = 0; p < 3; ++p) {
    PairStats& st = rep.pairs[p];
    st.label = labels[p];
    st.relative_turns = relative_turns(cfg.nominal[idx[p][0]], cfg.nominal[idx[p][1]]);
    st.nominal_cos = cos_turns(st.relative_turns).convert_to<double>();
    // A singlet's conditional sub-blocks have length L/2, so the relative
    // angle lives on the L/2 lattice.
    st.snapped = snap_to_lattice(st.nominal_cos, cfg.L / 2, tol);
    st.exact_cos = st.snapped.exact_cos();

    const detail::Tally t = detail::run_pair(st.exact_cos, cfg, p);
    st.trials = t.trials;
    st.product_sum = t.product_sum;
    const double n = static_cast<double>(t.trials);
    st.correlation = static_cast<double>(t.product_sum) / n;
    st.std_error = std::sqrt(std::max(0.0, 1 - st.correlation * st.correlation) / n);
    st.predicted_exact = -st.exact_cos.to_double();
    st.predicted_nominal = -st.nominal_cos;
    const double expected_sigma = std::sqrt(std::max(0.0, 1 - st.predicted_exact * st.predicted_exact) / n);
    const double diff = st.correlation - st.predicted_exact;
    if (expected_sigma > 0) st.z_score = diff / expected_sigma;
    else st.z_score = diff == 0 ? 0 : std::copysign(INFINITY, diff);
  }
  auto quantity = [](double ab, double ac, double bc) { return std::abs(ab - ac) - bc; };
  const auto& [ab, ac, bc] = rep.pairs;
  rep.bell_quantity = quantity(ab.correlation, ac.correlation, bc.correlation);
  rep.bell_quantity_std_error = std::sqrt(ab.std_error * ab.std_error + ac.std_error * ac.std_error + bc.std_error * bc.std_error);
  rep.predicted_nominal_quantity = quantity(ab.predicted_nominal, ac.predicted_nominal, bc.predicted_nominal);
  rep.predicted_exact_quantity = quantity(ab.predicted_exact, ac.predicted_exact, bc.predicted_exact);
  rep.violates = rep.bell_quantity > 1;
  return rep;
}

/// Exact position-averaged product of the two strings of a state.
inline Rational position_averaged_product(const TwoQubitState& s) {
  long long sum = 0;
  for (std::size_t k = 0; k < s.top.size(); ++k) sum += s.top[k] * s.bottom[k];
  return Rational(sum, static_cast<long long>(s.top.size()));
}

struct BellsumReport {
  Rational cos_ab;
  Rational cos_ac;
  RationalAngle phi_a;
  /// Bob's free choice of an exact C: always satisfiable.
  bool first_counterfactual_satisfiable = true;
  /// Alice at B while Bob stays at C: needs cos θ_BC rational.
  ItcVerdict second_counterfactual;
  bool degenerate = false;
  /// All three terms of the per-λ sum defined simultaneously.
  bool triple_product_defined = false;
  /// ρ(λ | nominal settings) = ρ(λ): the nominal choice constrains nothing.
  bool nominal_independence = true;
  /// ρ(λ | exact settings) = ρ(λ) would need the sum defined here.
  bool exact_independence = false;
};

inline BellsumReport bellsum_definability(const Rational& cos_ab, const Rational& cos_ac, const RationalAngle& phi_a) {
  BellsumReport r;
  r.cos_ab = cos_ab;
  r.cos_ac = cos_ac;
  r.phi_a = phi_a;
  r.second_counterfactual = itc_verdict(cos_ab, cos_ac, phi_a);
  r.degenerate = r.second_counterfactual.degenerate;
  r.triple_product_defined = r.second_counterfactual.possible;
  r.exact_independence = r.triple_product_defined;
  return r;
}

struct IndependenceProbe {
  std::uint64_t candidates = 0;
  std::uint64_t defined = 0;
  /// Whether the Bell sum is defined varies across exact settings that all
  /// lie in the same nominal neighbourhood.
  bool depends_on_exact_setting = false;
};

/// Sweeps exact interior angles inside one nominal neighbourhood.
inline IndependenceProbe measurement_independence_probe(const Rational& cos_ab, const Rational& cos_ac,
                                                        std::span<const RationalAngle> exact_phi_a) {
  IndependenceProbe p;
  for (const auto& phi : exact_phi_a) {
    ++p.candidates;
    if (bellsum_definability(cos_ab, cos_ac, phi).triple_product_defined) ++p.defined;
  }
  p.depends_on_exact_setting = p.defined != 0 && p.defined != p.candidates;
  return p;
}

}  // namespace raqm
