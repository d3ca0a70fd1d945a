#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "misinfo/errors.hpp"
#include "misinfo/hash.hpp"
#include "misinfo/neural.hpp"

namespace misinfo {

// key = value run configuration. '#' starts a comment. Canonical form (keys
// sorted, one per line) is what gets hashed for provenance, so flag
// overrides and file entries hash identically when they agree.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (trim(line).empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ValidationError("config entry missing '=': \"" + trim(line) + "\"", lineno);
      std::string key = trim(line.substr(0, eq));
      if (key.empty()) throw ValidationError("config entry with empty key", lineno);
      cfg.values_[key] = trim(line.substr(eq + 1));
    }
    return cfg;
  }

  static KeyValueConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  std::string require_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
      throw ValidationError("config key \"" + key + "\" is required");
    return it->second;
  }

  double get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("config key \"" + key + "\": \"" + it->second +
                            "\" is not a number");
    }
  }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("");
      return std::uint64_t(v);
    } catch (const std::exception&) {
      throw ValidationError("config key \"" + key + "\": \"" + it->second +
                            "\" is not a non-negative integer");
    }
  }

  bool get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (it->second == "true" || it->second == "1" || it->second == "yes") return true;
    if (it->second == "false" || it->second == "0" || it->second == "no") return false;
    throw ValidationError("config key \"" + key + "\": \"" + it->second +
                          "\" is not a boolean");
  }

  std::string canonical() const {
    std::ostringstream out;
    for (const auto& [k, v] : values_) out << k << " = " << v << "\n";
    return out.str();
  }

  std::string hash_hex() const { return to_hex(fnv1a64(canonical())); }

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  std::map<std::string, std::string> values_;
};

// Training hyperparameters for one stage: "<stage>.<name>" beats
// "train.<name>" beats the built-in default. The root seed is global.
inline TrainConfig train_config_for_stage(const KeyValueConfig& cfg,
                                          const std::string& stage,
                                          std::uint64_t seed) {
  auto str = [&](const std::string& name, const std::string& fallback) {
    return cfg.get_string(stage + "." + name,
                          cfg.get_string("train." + name, fallback));
  };
  auto num = [&](const std::string& name, double fallback) {
    return cfg.get_double(stage + "." + name,
                          cfg.get_double("train." + name, fallback));
  };
  TrainConfig tc;
  std::string opt = str("optimizer", "adam");
  if (opt == "adam") {
    tc.optimizer = TrainConfig::Optimizer::Adam;
  } else if (opt == "sgd-nesterov") {
    tc.optimizer = TrainConfig::Optimizer::SgdNesterov;
  } else {
    throw ValidationError("unknown optimizer \"" + opt +
                          "\" (expected adam|sgd-nesterov)");
  }
  tc.lr = num("lr", tc.lr);
  tc.weight_decay = num("weight_decay", tc.weight_decay);
  double batch = num("batch_size", double(tc.batch_size));
  if (batch < 1) throw ValidationError("batch_size must be >= 1");
  tc.batch_size = std::size_t(batch);
  tc.iterations = std::size_t(num("iterations", double(tc.iterations)));
  tc.epochs_per_iteration =
      std::size_t(num("epochs", double(tc.epochs_per_iteration)));
  if (tc.iterations < 1 || tc.epochs_per_iteration < 1)
    throw ValidationError("iterations and epochs must be >= 1");
  std::string pw = str("pos_weight", "auto");
  if (pw != "auto") {
    try {
      tc.pos_weight = std::stod(pw);
    } catch (const std::exception&) {
      throw ValidationError("pos_weight must be a number or \"auto\"");
    }
  }
  tc.seed = seed;
  return tc;
}

}  // namespace misinfo
