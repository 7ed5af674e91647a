#pragma once

// Plain-text experiment configs: one `key = value` per line, '#' comments.
// Angles are fractions of a turn ("1/6"), lists are comma separated.

#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "raqm/angle.hpp"
#include "raqm/errors.hpp"
#include "raqm/rational.hpp"

namespace raqm {

class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in) {
    KeyValueConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) throw config_error("line " + std::to_string(lineno) + ": expected key = value");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key.empty()) throw config_error("line " + std::to_string(lineno) + ": empty key");
      if (!cfg.values_.emplace(key, value).second) throw config_error("duplicate key '" + key + "'");
    }
    return cfg;
  }
  static KeyValueConfig parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    return parse(in);
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  void require_known(const std::set<std::string>& known) const {
    for (const auto& [k, v] : values_) {
      if (!known.count(k)) throw config_error("unknown config key '" + k + "'");
    }
  }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::uint64_t> get_u64(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return parse_u64(*v, key);
  }
  std::optional<Rational> get_rational(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return Rational::parse(*v);
  }
  std::optional<std::vector<RationalAngle>> get_angles(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return parse_angle_list(*v);
  }

  static std::vector<RationalAngle> parse_angle_list(const std::string& text) {
    std::vector<RationalAngle> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(RationalAngle::parse(item));
    return out;
  }
  static std::uint64_t parse_u64(const std::string& text, const std::string& key) {
    std::string t = trim(text);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
      throw config_error("'" + key + "' must be a non-negative integer, got '" + text + "'");
    }
    try {
      return std::stoull(t);
    } catch (const std::out_of_range&) {
      throw config_error("'" + key + "' is out of range");
    }
  }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  std::map<std::string, std::string> values_;
};

}  // namespace raqm
