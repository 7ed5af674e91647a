#pragma once

/**
 * @file report_json.hpp
 * @brief JSON and CSV serialisation of reports.
 *
 * Every top-level report carries "schema": "raqm.<kind>/<version>". Exact
 * values are serialised as "p/q" strings; 200-bit reals as decimal strings
 * with 45 significant digits alongside a plain double.
 */

#include <json.hpp>

#include <ostream>
#include <string>

#include "raqm/bell.hpp"
#include "raqm/bitstring.hpp"
#include "raqm/interference.hpp"
#include "raqm/lattice.hpp"
#include "raqm/niven.hpp"
#include "raqm/noncommutativity.hpp"
#include "raqm/qubit.hpp"
#include "raqm/reduction.hpp"
#include "raqm/triangle.hpp"
#include "raqm/uncertainty.hpp"

namespace raqm::report {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline std::string schema(const std::string& kind) { return "raqm." + kind + "/" + std::to_string(schema_version); }

inline json real(const Real& x) {
  return json{{"value", x.convert_to<double>()}, {"digits", x.str(45, std::ios_base::scientific)}};
}

inline json bits(const BitString& s) {
  json a = json::array();
  for (int b : s) a.push_back(b);
  return a;
}

inline json exact_cosine(const ExactCosine& c) {
  json j{{"kind", c.kind_name()}, {"text", c.str()}};
  switch (c.kind()) {
    case ExactCosine::Kind::rational:
      j["value"] = c.value().str();
      break;
    case ExactCosine::Kind::irrational_surd:
      j["rational_part"] = c.surd().rational_part().str();
      j["coefficient"] = c.surd().radical_coefficient().str();
      j["radicand"] = c.surd().radicand().str();
      break;
    case ExactCosine::Kind::irrational_by_niven:
      j["witness_turns"] = c.witness().str();
      j["certificate"] = "reduced denominator " + c.witness().reduced_denominator().str() + " not in {1,2,3,4,6}";
      break;
  }
  return j;
}

inline json niven(const RationalAngle& angle, const ExactCosine& c, const std::optional<Rational>& cos_sq) {
  return json{{"schema", schema("niven")},
              {"turns", angle.str()},
              {"reduced_denominator", angle.reduced_denominator().str()},
              {"cos_phi", exact_cosine(c)},
              {"cos_sq_phi", cos_sq ? json(cos_sq->str()) : json(nullptr)}};
}

inline json itc(const Rational& cos_ab, const Rational& cos_bc, const RationalAngle& phi_c, const ItcVerdict& v) {
  return json{{"schema", schema("itc")},
              {"cos_ab", cos_ab.str()},
              {"cos_bc", cos_bc.str()},
              {"phi_c_turns", phi_c.str()},
              {"possible", v.possible},
              {"degenerate", v.degenerate},
              {"third_side", exact_cosine(v.third_side)},
              {"reason", v.reason}};
}

inline json lattice_point(const LatticePoint& p) {
  return json{{"m", p.m()}, {"n", p.n()}, {"L", p.L()}, {"cos_theta", p.cos_theta().str()}, {"phi_turns", p.phi().str()}};
}

inline json bloch(const BlochFraction& f) {
  return json{{"cos_sq_half_theta", f.ones.str()}, {"phi_turns", f.turns.fractional().str()}};
}

inline json qubit_state(const QubitState& s) {
  return json{{"schema", schema("state")},
              {"L", s.point.L()},
              {"params", lattice_point(s.point)},
              {"xi_seed", s.xi.seed() ? json(*s.xi.seed()) : json(nullptr)},
              {"top", bits(s.string)},
              {"bottom", nullptr}};
}

inline json two_qubit_state(const TwoQubitState& s) {
  json params{{"theta1_phi1", bloch(s.params.a)},
              {"theta2_phi2", bloch(s.params.b_if_up)},
              {"theta3_phi3", bloch(s.params.b_if_down)}};
  if (s.singlet_cos) params["singlet_cos_theta_ab"] = s.singlet_cos->str();
  return json{{"schema", schema("state")},
              {"L", s.L},
              {"params", params},
              {"xi_seed", s.xi.seed() ? json(*s.xi.seed()) : json(nullptr)},
              {"top", bits(s.top)},
              {"bottom", bits(s.bottom)}};
}

/// One JSON object per line: {step, plus_bits, minus_bits}.
inline void write_trace_jsonl(std::ostream& os, const ReductionTrace& t) {
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    os << json{{"step", k}, {"plus_bits", t.steps[k].plus_bits()}, {"minus_bits", t.steps[k].minus_bits()}}.dump()
       << '\n';
  }
}

inline json measurement(const LatticePoint& p, const QubitState& s, const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& st : t.steps) steps.push_back(st.str());
  return json{{"schema", schema("measure")},
              {"point", lattice_point(p)},
              {"xi_seed", s.xi.seed() ? json(*s.xi.seed()) : json(nullptr)},
              {"string", bits(s.string)},
              {"trace", steps},
              {"step_count", t.step_count},
              {"outcome", t.outcome}};
}

inline json mz(const MZReport& r) {
  json exact = nullptr;
  if (r.exact_output_probabilities) {
    exact = json::array({(*r.exact_output_probabilities)[0].str(), (*r.exact_output_probabilities)[1].str()});
  }
  return json{{"schema", schema("mz")},
              {"phi_turns", r.phi.str()},
              {"inside_definable", r.inside_definable},
              {"inside_certificate", r.inside_certificate},
              {"output_definable", r.output_definable},
              {"output_certificate", exact_cosine(r.output_certificate)},
              {"output_probabilities", json::array({real(r.output_probabilities[0]), real(r.output_probabilities[1])})},
              {"exact_output_probabilities", exact},
              {"niven_conflict", r.niven_conflict}};
}

inline json delayed(const RationalAngle& phi, const DelayedChoiceReport& r) {
  return json{{"schema", schema("delayed-choice")},
              {"phi_turns", phi.str()},
              {"second_mirror_in", r.second_mirror_in},
              {"demand", r.demand},
              {"satisfied", r.satisfied},
              {"cos_phi", exact_cosine(r.cos_phi)},
              {"explanation", r.explanation}};
}

inline json identity_split(const IdentitySplitReport& r) {
  auto opt = [](const std::optional<Rational>& v) { return v ? json(v->str()) : json(nullptr); };
  return json{{"schema", schema("identity-split")},
              {"phi_a_turns", r.phi_a.str()},
              {"phi_b_turns", r.phi_b.str()},
              {"sum_residual", real(r.sum_residual)},
              {"difference_residual", real(r.difference_residual)},
              {"identities_hold", r.identities_hold},
              {"amplitude_sq", opt(r.amplitude_sq)},
              {"phases_rational", r.phases_rational},
              {"exception_hit", r.exception_hit},
              {"clash", r.clash},
              {"sin_sq_k_dx", opt(r.sin_sq_k_dx)},
              {"sin_sq_kx", opt(r.sin_sq_kx)}};
}

inline json uncertainty(const DirectionCosines& d, const UncertaintyRecord& r) {
  return json{{"schema", schema("uncertainty")},
              {"cosines", json::array({real(d.cos_theta), real(d.cos_theta_prime), real(d.cos_theta_dprime)})},
              {"sigma_product", real(r.sigma_product)},
              {"abs_mean", real(r.abs_mean)},
              {"holds", r.holds},
              {"equality", r.equality},
              {"delta_sx_delta_sy", real(r.delta_sx_delta_sy)},
              {"half_hbar_mean_sz", real(r.half_hbar_mean_sz)}};
}

inline json aggregate(const AggregateRecord& r, std::uint64_t seed) {
  return json{{"schema", schema("uncertainty-aggregate")},
              {"samples", r.samples},
              {"seed", seed},
              {"mean_abs_cos", r.mean_abs_cos},
              {"mean_sigma_sq_prime", r.mean_sigma_sq_prime},
              {"mean_sigma_sq_dprime", r.mean_sigma_sq_dprime},
              {"product_of_means", r.product_of_means},
              {"mean_of_products", r.mean_of_products},
              {"mean_mu_sq", r.mean_mu_sq},
              {"bound", r.bound},
              {"holds_half", r.holds_half},
              {"chain_holds", r.chain_holds},
              {"equality", r.equality}};
}

inline json sg(const SgVerdict& v) {
  return json{{"schema", schema("sg")},
              {"cos_ab", v.cos_ab.str()},
              {"cos_bc", v.cos_bc.str()},
              {"phi_b_turns", v.phi_b.str()},
              {"swapped_definable", v.swapped_definable},
              {"degenerate", v.verdict.degenerate},
              {"cos_ac", exact_cosine(v.verdict.third_side)},
              {"reason", v.verdict.reason}};
}

inline json bellsum(const BellsumReport& r) {
  return json{{"schema", schema("bellsum")},
              {"cos_ab", r.cos_ab.str()},
              {"cos_ac", r.cos_ac.str()},
              {"phi_a_turns", r.phi_a.str()},
              {"first_counterfactual_satisfiable", r.first_counterfactual_satisfiable},
              {"second_counterfactual_possible", r.second_counterfactual.possible},
              {"cos_bc", exact_cosine(r.second_counterfactual.third_side)},
              {"degenerate", r.degenerate},
              {"triple_product_defined", r.triple_product_defined},
              {"nominal_independence", r.nominal_independence},
              {"exact_independence", r.exact_independence},
              {"reason", r.second_counterfactual.reason}};
}

inline json bell(const BellReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(json{{"pair", p.label},
                         {"relative_turns", p.relative_turns.str()},
                         {"nominal_cos", p.nominal_cos},
                         {"snapped_m", p.snapped.snapped.m()},
                         {"snapped_lattice_L", p.snapped.snapped.L()},
                         {"exact_cos", p.exact_cos.str()},
                         {"trials", p.trials},
                         {"product_sum", p.product_sum},
                         {"correlation", p.correlation},
                         {"std_error", p.std_error},
                         {"predicted_exact", p.predicted_exact},
                         {"predicted_nominal", p.predicted_nominal},
                         {"z_score", p.z_score}});
  }
  json angles = json::array();
  for (const auto& a : r.config.nominal) angles.push_back(a.str());
  return json{{"schema", schema("bell")},
              {"config",
               {{"angles_turns", angles},
                {"L", r.config.L},
                {"trials_per_pair", r.config.trials_per_pair},
                {"seed", r.config.seed},
                {"tolerance", r.config.tolerance.value_or(Rational(2, static_cast<long long>(r.config.L))).str()}}},
              {"pairs", pairs},
              {"bell_quantity", r.bell_quantity},
              {"bell_quantity_std_error", r.bell_quantity_std_error},
              {"predicted_nominal_quantity", r.predicted_nominal_quantity},
              {"predicted_exact_quantity", r.predicted_exact_quantity},
              {"bound", 1},
              {"violates", r.violates}};
}

inline void write_bell_csv(std::ostream& os, const BellReport& r) {
  os << "pair,relative_turns,nominal_cos,exact_cos,trials,product_sum,correlation,std_error,predicted_exact,"
        "predicted_nominal,z_score\n";
  for (const auto& p : r.pairs) {
    os << p.label << ',' << p.relative_turns.str() << ',' << p.nominal_cos << ',' << p.exact_cos.str() << ','
       << p.trials << ',' << p.product_sum << ',' << p.correlation << ',' << p.std_error << ',' << p.predicted_exact
       << ',' << p.predicted_nominal << ',' << p.z_score << '\n';
  }
}

}  // namespace raqm::report
