// raqm: command-line driver for the lattice, rationality and experiment modules.
//
// Exit status: 0 success, 2 invalid configuration or usage, 3 parameters not
// realisable on the lattice, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "raqm/raqm.hpp"
#include "raqm/report_json.hpp"

namespace {

using raqm::report::json;
using Params = std::map<std::string, std::string>;

struct ParamSpec {
  std::string name;
  std::string help;
  std::optional<std::string> fallback;
};

struct Outcome {
  json report;
  std::vector<std::pair<std::string, std::string>> rows;
  std::optional<std::string> csv;
  std::optional<std::string> trace;
  bool equations = false;  // print rows as "label = value"
};

struct Command {
  std::string name;
  std::string help;
  std::vector<ParamSpec> params;
  std::function<Outcome(const Params&)> run;
};

const std::string& need(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw raqm::config_error("missing required parameter --" + key);
  return it->second;
}
bool has(const Params& p, const std::string& key) { return p.count(key) != 0; }

std::uint64_t u64(const Params& p, const std::string& key) { return raqm::KeyValueConfig::parse_u64(need(p, key), key); }
raqm::Rational rational(const Params& p, const std::string& key) { return raqm::Rational::parse(need(p, key)); }
raqm::RationalAngle angle(const Params& p, const std::string& key) { return raqm::RationalAngle::parse(need(p, key)); }

raqm::LatticePoint point(const Params& p) { return raqm::LatticePoint(u64(p, "m"), u64(p, "n"), u64(p, "L")); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fixed(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string cosine_text(const raqm::ExactCosine& c) {
  switch (c.kind()) {
    case raqm::ExactCosine::Kind::rational:
      return c.value().str() + " (rational)";
    case raqm::ExactCosine::Kind::irrational_surd:
      return c.surd().str() + " (irrational, quadratic surd)";
    case raqm::ExactCosine::Kind::irrational_by_niven:
      return "irrational (Niven: " + c.witness().str() + " turn has reduced denominator " +
             c.witness().reduced_denominator().str() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Subcommands

Outcome run_sphere(const Params& p) {
  const std::uint64_t L = u64(p, "L");
  if (L < 1) throw raqm::config_error("L must be at least 1");
  Outcome o;
  json points = json::array();
  for (const auto& pt : raqm::enumerate_sphere(L)) {
    json j = raqm::report::lattice_point(pt);
    j["bits"] = raqm::report::bits(raqm::canonical_bitstring(pt));
    points.push_back(std::move(j));
  }
  const bool spinorial = raqm::is_power_of_two(L) && L >= 2;
  json circle = json::array();
  std::vector<raqm::BitString> strings = spinorial ? raqm::build_spinorial_circle(L) : raqm::interpolated_circle(L);
  for (const auto& s : strings) {
    circle.push_back(json{{"bits", raqm::report::bits(s)}, {"cos_theta", raqm::latitude_cos(s).str()}});
  }
  o.report = json{{"schema", raqm::report::schema("sphere")},
                  {"L", L},
                  {"point_count", points.size()},
                  {"points", points},
                  {"circle_kind", spinorial ? "spinorial" : "interpolated"},
                  {"circle", circle}};
  std::ostringstream csv;
  raqm::write_lattice_csv(csv, L);
  o.csv = csv.str();
  o.rows = {{"L", std::to_string(L)},
            {"lattice points", std::to_string(points.size())},
            {"circle", spinorial ? "spinorial" : "interpolated"}};
  if (strings.size() <= 32) {
    std::string line;
    for (const auto& s : strings) line += (line.empty() ? "" : " ") + s.str();
    o.rows.emplace_back("circle strings", line);
  }
  return o;
}

Outcome run_niven(const Params& p) {
  const auto phi = angle(p, "turns");
  const auto c = raqm::niven_cosine(phi);
  const auto c2 = raqm::cos_squared(phi);
  Outcome o;
  o.report = raqm::report::niven(phi, c, c2);
  o.equations = true;
  o.rows = {{"φ/2π", phi.str()},
            {"cos φ", cosine_text(c)},
            {"cos² φ", c2 ? c2->str() + " (rational)" : "irrational"}};
  return o;
}

Outcome run_itc(const Params& p) {
  const auto ab = rational(p, "cos-ab"), bc = rational(p, "cos-bc");
  const auto phi = angle(p, "phi");
  const auto v = raqm::itc_verdict(ab, bc, phi);
  Outcome o;
  o.report = raqm::report::itc(ab, bc, phi, v);
  o.rows = {{"cos θ_AB", ab.str()},
            {"cos θ_BC", bc.str()},
            {"φ_C/2π", phi.str()},
            {"cos θ_AC", cosine_text(v.third_side)},
            {"possible", yes_no(v.possible)},
            {"reason", v.reason}};
  return o;
}

Outcome run_state(const Params& p) {
  const std::uint64_t seed = u64(p, "seed");
  const std::uint64_t L = u64(p, "L");
  Outcome o;
  if (has(p, "singlet-cos")) {
    const auto c = rational(p, "singlet-cos");
    const auto s = raqm::make_singlet(c, L, raqm::HiddenPermutation::from_seed(seed, L));
    o.report = raqm::report::two_qubit_state(s);
    o.rows = {{"L", std::to_string(L)},
              {"singlet cos θ_AB", c.str()},
              {"top", s.top.str()},
              {"bottom", s.bottom.str()},
              {"position-averaged product", raqm::position_averaged_product(s).str()}};
    return o;
  }
  const auto pt = point(p);
  const auto s = raqm::make_qubit(pt, raqm::HiddenPermutation::from_seed(seed, pt.L()));
  o.report = raqm::report::qubit_state(s);
  o.rows = {{"(m, n, L)", std::to_string(pt.m()) + ", " + std::to_string(pt.n()) + ", " + std::to_string(pt.L())},
            {"cos θ", pt.cos_theta().str()},
            {"φ/2π", pt.phi().str()},
            {"string", s.string.str()},
            {"ones fraction", raqm::ones_fraction(s.string).str()}};
  return o;
}

Outcome run_measure(const Params& p) {
  const auto pt = point(p);
  const std::uint64_t seed = u64(p, "seed");
  const std::uint64_t trials = u64(p, "trials");
  if (trials < 1) throw raqm::config_error("trials must be at least 1");

  const auto first = raqm::make_qubit(pt, raqm::HiddenPermutation::from_seed(seed, pt.L()));
  const auto trace = raqm::measure(first.string);
  Outcome o;
  o.report = raqm::report::measurement(pt, first, trace);
  std::ostringstream jsonl;
  raqm::report::write_trace_jsonl(jsonl, trace);
  o.trace = jsonl.str();

  std::string steps;
  for (const auto& st : trace.steps) steps += (steps.empty() ? "" : " -> ") + st.str();
  o.rows = {{"string", first.string.str()}, {"trace", steps}, {"outcome", std::to_string(trace.outcome)}};

  if (trials > 1) {
    const auto canonical = raqm::canonical_bitstring(pt);
    std::uint64_t plus = trace.outcome == 1 ? 1 : 0;
    for (std::uint64_t t = 1; t < trials; ++t) {
      const auto xi = raqm::HiddenPermutation::from_seed(raqm::derive_seed(seed, {t}), pt.L());
      if (raqm::measured_bit(xi(canonical)) == 1) ++plus;
    }
    const double freq = static_cast<double>(plus) / static_cast<double>(trials);
    o.report["trials"] = trials;
    o.report["plus_count"] = plus;
    o.report["plus_frequency"] = freq;
    o.report["born_probability"] = pt.cos_sq_half_theta().str();
    o.rows.emplace_back("trials", std::to_string(trials));
    o.rows.emplace_back("+1 frequency", fixed(freq));
    o.rows.emplace_back("Born probability", pt.cos_sq_half_theta().str());
  }
  return o;
}

Outcome run_mz(const Params& p) {
  const auto r = raqm::mz_simulate(angle(p, "phi"));
  Outcome o;
  o.report = raqm::report::mz(r);
  o.rows = {{"φ/2π", r.phi.str()},
            {"inside basis", r.inside_certificate},
            {"output basis", "cos φ = " + cosine_text(r.output_certificate)},
            {"P(+1), P(-1)", fixed(r.output_probabilities[0].convert_to<double>(), 12) + ", " +
                                 fixed(r.output_probabilities[1].convert_to<double>(), 12)},
            {"both stages definable", yes_no(!r.niven_conflict)}};
  return o;
}

Outcome run_delayed(const Params& p) {
  const auto phi = angle(p, "phi");
  const std::string mirror = need(p, "mirror");
  if (mirror != "in" && mirror != "out") throw raqm::config_error("--mirror must be 'in' or 'out'");
  const auto r = raqm::delayed_choice(phi, mirror == "in");
  Outcome o;
  o.report = raqm::report::delayed(phi, r);
  o.rows = {{"φ/2π", phi.str()},
            {"second mirror", mirror},
            {"demand", r.demand},
            {"satisfied", yes_no(r.satisfied)},
            {"explanation", r.explanation}};
  return o;
}

Outcome run_uncertainty(const Params& p) {
  Outcome o;
  if (has(p, "samples")) {
    const std::uint64_t samples = u64(p, "samples"), seed = u64(p, "seed");
    if (samples < 1) throw raqm::config_error("samples must be at least 1");
    const auto r = raqm::position_momentum_aggregate(samples, seed);
    o.report = raqm::report::aggregate(r, seed);
    o.rows = {{"samples", std::to_string(samples)},
              {"mean |cos θ|", fixed(r.mean_abs_cos)},
              {"bound", fixed(r.bound)},
              {"bound >= 1/2", yes_no(r.holds_half)},
              {"chain holds", yes_no(r.chain_holds)}};
    return o;
  }
  const auto pt = point(p);
  const auto d = raqm::direction_from(pt);
  const auto r = raqm::uncertainty_check(d);
  const auto obstruction = raqm::spin_obstruction(pt.cos_theta(), pt.phi());
  o.report = raqm::report::uncertainty(d, r);
  o.report["cos_theta_exact"] = pt.cos_theta().str();
  o.report["phi_turns"] = pt.phi().str();
  o.report["cos_theta_prime_exact"] = raqm::report::exact_cosine(obstruction);
  o.rows = {{"cos θ", pt.cos_theta().str()},
            {"cos θ'", cosine_text(obstruction)},
            {"sin θ' sin θ''", fixed(r.sigma_product.convert_to<double>(), 12)},
            {"|cos θ|", fixed(r.abs_mean.convert_to<double>(), 12)},
            {"inequality holds", yes_no(r.holds)},
            {"equality", yes_no(r.equality)}};
  return o;
}

Outcome run_sg(const Params& p) {
  const auto v = raqm::sg_counterfactual(rational(p, "cos-ab"), rational(p, "cos-bc"), angle(p, "phi"));
  Outcome o;
  o.report = raqm::report::sg(v);
  o.rows = {{"cos θ_AB", v.cos_ab.str()},
            {"cos θ_BC", v.cos_bc.str()},
            {"φ_B/2π", v.phi_b.str()},
            {"cos θ_AC", cosine_text(v.verdict.third_side)},
            {"swapped order definable", yes_no(v.swapped_definable)},
            {"reason", v.verdict.reason}};
  return o;
}

Outcome run_bell(const Params& p) {
  raqm::BellConfig cfg;
  const auto angles = raqm::KeyValueConfig::parse_angle_list(need(p, "angles"));
  if (angles.size() != 3) throw raqm::config_error("--angles needs exactly three fractions of a turn");
  cfg.nominal = {angles[0], angles[1], angles[2]};
  cfg.L = u64(p, "L");
  cfg.trials_per_pair = u64(p, "trials");
  cfg.seed = u64(p, "seed");
  if (has(p, "tolerance")) cfg.tolerance = rational(p, "tolerance");
  const std::uint64_t workers = u64(p, "workers");
  if (workers < 1 || workers > 256) throw raqm::config_error("workers must be in [1, 256]");
  cfg.workers = static_cast<unsigned>(workers);

  const auto r = raqm::bell_run(cfg);
  Outcome o;
  o.report = raqm::report::bell(r);
  std::ostringstream csv;
  raqm::report::write_bell_csv(csv, r);
  o.csv = csv.str();
  for (const auto& ps : r.pairs) {
    o.rows.emplace_back("Co(" + ps.label.substr(0, 1) + "," + ps.label.substr(1) + ")",
                        fixed(ps.correlation) + " ± " + fixed(ps.std_error) + "  (exact -cos = " +
                            fixed(ps.predicted_exact) + ", z = " + fixed(ps.z_score, 2) + ")");
  }
  o.rows.emplace_back("Bell quantity", fixed(r.bell_quantity) + " ± " + fixed(r.bell_quantity_std_error));
  o.rows.emplace_back("nominal prediction", fixed(r.predicted_nominal_quantity));
  o.rows.emplace_back("violates bound 1", yes_no(r.violates));
  return o;
}

std::vector<Command> commands() {
  const ParamSpec m{"m", "number of +1 entries (cos²(θ/2) = m/L)", std::nullopt};
  const ParamSpec n{"n", "cyclic shifts (φ/2π = n/L)", std::nullopt};
  const ParamSpec L{"L", "bit-string length", std::nullopt};
  const ParamSpec seed{"seed", "seed for the hidden permutation", "0"};
  return {
      {"sphere", "enumerate the lattice sphere and its great circle", {L}, run_sphere},
      {"niven", "exact cosine of a rational angle", {{"turns", "angle as a fraction of a turn, p/q", std::nullopt}},
       run_niven},
      {"itc",
       "rationality of the third side of a spherical triangle",
       {{"cos-ab", "cos θ_AB as p/q", std::nullopt},
        {"cos-bc", "cos θ_BC as p/q", std::nullopt},
        {"phi", "interior angle at C, fraction of a turn", std::nullopt}},
       run_itc},
      {"state",
       "build a one-qubit string, or a singlet with --singlet-cos",
       {{"m", m.help, std::nullopt}, {"n", n.help, "0"}, L, seed,
        {"singlet-cos", "cos θ_AB of a singlet, p/q", std::nullopt}},
       run_state},
      {"measure",
       "reduce a qubit string to an outcome",
       {m, {"n", n.help, "0"}, L, seed, {"trials", "number of independent ξ draws", "1"}},
       run_measure},
      {"mz", "Mach-Zehnder interferometer with a rational phase", {{"phi", "phase, fraction of a turn", std::nullopt}},
       run_mz},
      {"delayed-choice",
       "basis demand with the second mirror in or out",
       {{"phi", "phase, fraction of a turn", std::nullopt}, {"mirror", "in or out", "in"}},
       run_delayed},
      {"uncertainty",
       "check the direction-cosine inequality at a lattice point, or aggregate with --samples",
       {{"m", m.help, std::nullopt}, {"n", n.help, "0"}, {"L", L.help, std::nullopt}, seed,
        {"samples", "number of random directions for the aggregate", std::nullopt}},
       run_uncertainty},
      {"sg",
       "definability of swapping two Stern-Gerlach devices",
       {{"cos-ab", "cos θ_AB as p/q", std::nullopt},
        {"cos-bc", "cos θ_BC as p/q", std::nullopt},
        {"phi", "interior angle at B, fraction of a turn", std::nullopt}},
       run_sg},
      {"bell",
       "Monte Carlo Bell experiment on singlet strings",
       {{"angles", "three coplanar settings, fractions of a turn", "0,1/6,1/3"},
        {"L", L.help, "360"},
        {"trials", "trials per pair", "100000"},
        seed,
        {"tolerance", "snapping tolerance on cos θ, p/q (default 2/L)", std::nullopt},
        {"workers", "worker threads", "1"}},
       run_bell},
  };
}

// ---------------------------------------------------------------------------
// Reports, manifests

struct Outputs {
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  std::optional<std::string> trace_path;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw raqm::config_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw raqm::config_error("failed writing '" + path + "'");
}

std::string timestamp_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json manifest_json(const std::string& command, const Params& params, const Outputs& out) {
  json cfg = json::object();
  for (const auto& [k, v] : params) cfg[k] = v;
  auto path = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
  return json{{"schema", raqm::report::schema("manifest")},
              {"command", command},
              {"config", cfg},
              {"seed", params.count("seed") ? json(params.at("seed")) : json(nullptr)},
              {"tool_version", raqm::version},
              {"timestamp", timestamp_utc()},
              {"outputs", {{"json", path(out.json_path)}, {"csv", path(out.csv_path)}, {"trace", path(out.trace_path)}}}};
}

void print_rows(std::ostream& os, const std::string& command, const Outcome& o) {
  const auto& rows = o.rows;
  // Width in code points so the UTF-8 labels line up.
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
  };
  std::size_t col = 0;
  for (const auto& [k, v] : rows) col = std::max(col, width(k));
  os << "raqm " << command << '\n';
  if (o.equations) {
    for (const auto& [k, v] : rows) os << "  " << k << " = " << v << '\n';
    return;
  }
  for (const auto& [k, v] : rows) os << "  " << k << std::string(col - width(k), ' ') << "  " << v << '\n';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int execute(const Command& cmd, const Params& params, const Outputs& out, bool print_json,
            const std::optional<std::string>& manifest_path) {
  Outcome o = cmd.run(params);
  if (out.csv_path) {
    if (!o.csv) throw raqm::config_error("'" + cmd.name + "' has no CSV output");
    write_file(*out.csv_path, *o.csv);
  }
  if (out.trace_path) {
    if (!o.trace) throw raqm::config_error("'" + cmd.name + "' has no trace output");
    write_file(*out.trace_path, *o.trace);
  }
  if (out.json_path) write_file(*out.json_path, dump(o.report));
  if (manifest_path) write_file(*manifest_path, dump(manifest_json(cmd.name, params, out)));
  if (print_json) std::cout << dump(o.report);
  else print_rows(std::cout, cmd.name, o);
  return 0;
}

const Command& find_command(const std::vector<Command>& all, const std::string& name) {
  for (const auto& c : all) {
    if (c.name == name) return c;
  }
  throw raqm::config_error("unknown command '" + name + "'");
}

Params merge_params(const Command& cmd, const std::optional<std::string>& config_path,
                    const std::map<std::string, std::optional<std::string>>& flags) {
  Params params;
  std::set<std::string> known;
  for (const auto& spec : cmd.params) {
    known.insert(spec.name);
    if (spec.fallback) params[spec.name] = *spec.fallback;
  }
  if (config_path) {
    const auto cfg = raqm::KeyValueConfig::parse_file(*config_path);
    cfg.require_known(known);
    for (const auto& [k, v] : cfg.values()) params[k] = v;
  }
  for (const auto& [k, v] : flags) {
    if (v) params[k] = *v;
  }
  return params;
}

int replay(const std::vector<Command>& all, const std::string& manifest_path, const std::optional<std::string>& out_override,
           bool print_json) {
  std::ifstream in(manifest_path);
  if (!in) throw raqm::config_error("cannot open manifest '" + manifest_path + "'");
  json m;
  try {
    m = json::parse(in);
  } catch (const json::parse_error& e) {
    throw raqm::config_error("manifest is not valid JSON: " + std::string(e.what()));
  }
  if (!m.contains("schema") || m["schema"] != raqm::report::schema("manifest")) {
    throw raqm::config_error("unsupported manifest schema");
  }
  const Command& cmd = find_command(all, m.at("command").get<std::string>());
  std::set<std::string> known;
  for (const auto& spec : cmd.params) known.insert(spec.name);
  Params params;
  for (const auto& [k, v] : m.at("config").items()) {
    if (!known.count(k)) throw raqm::config_error("manifest has unknown parameter '" + k + "'");
    params[k] = v.get<std::string>();
  }
  Outputs out;
  const auto& o = m.at("outputs");
  auto path = [&](const char* key) -> std::optional<std::string> {
    if (!o.contains(key) || o[key].is_null()) return std::nullopt;
    return o[key].get<std::string>();
  };
  out.json_path = out_override ? out_override : path("json");
  out.csv_path = path("csv");
  out.trace_path = path("trace");
  return execute(cmd, params, out, print_json, std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
  const auto all = commands();

  CLI::App app{"raqm: exact bit-string simulator for rational quantum mechanics"};
  app.set_version_flag("--version", std::string(raqm::version));
  app.require_subcommand(0, 1);

  std::optional<std::string> replay_path, replay_out;
  bool replay_json = false;
  app.add_option("--replay", replay_path, "re-run a manifest written with --manifest");
  app.add_option("--out", replay_out, "with --replay: write the JSON report here instead");
  app.add_flag("--json", replay_json, "with --replay: print the JSON report");

  struct SubState {
    std::map<std::string, std::optional<std::string>> flags;
    std::optional<std::string> out, csv, trace, config, manifest;
    bool json = false;
  };
  std::map<std::string, SubState> state;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : all) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    subs[cmd.name] = sub;
    SubState& st = state[cmd.name];
    for (const auto& spec : cmd.params) {
      std::string help = spec.help;
      if (spec.fallback) help += " [default " + *spec.fallback + "]";
      sub->add_option("--" + spec.name, st.flags[spec.name], help);
    }
    sub->add_flag("--json", st.json, "print the JSON report instead of the summary table");
    sub->add_option("--out", st.out, "write the JSON report to this file");
    sub->add_option("--config", st.config, "key = value file supplying parameters");
    sub->add_option("--manifest", st.manifest, "write a run manifest to this file");
    if (cmd.name == "sphere" || cmd.name == "bell") sub->add_option("--csv", st.csv, "write a CSV table to this file");
    if (cmd.name == "measure") sub->add_option("--trace", st.trace, "write the reduction trace as JSON lines");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* shown = &app;
    for (const auto* s : app.get_subcommands()) shown = s;
    std::cerr << shown->help();
    return 2;
  }

  try {
    if (replay_path) {
      if (!app.get_subcommands().empty()) throw raqm::config_error("--replay takes no subcommand");
      return replay(all, *replay_path, replay_out, replay_json);
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }
    if (replay_out || replay_json) throw raqm::config_error("--out and --json go after the subcommand");
    const std::string name = app.get_subcommands().front()->get_name();
    const Command& cmd = find_command(all, name);
    const SubState& st = state.at(name);
    const Params params = merge_params(cmd, st.config, st.flags);
    return execute(cmd, params, Outputs{st.out, st.csv, st.trace}, st.json, st.manifest);
  } catch (const raqm::unrealisable_error& e) {
    std::cerr << "unrealisable: " << e.what() << '\n';
    return 3;
  } catch (const raqm::config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
