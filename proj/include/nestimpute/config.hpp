#pragma once

// Flat key-value run configuration with [section] headers. Keys are addressed
// as "section.key". Lines starting with '#' or ';' are comments.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nestimpute/gibbs.hpp"

namespace nestimpute {

class Config {
 public:
  Config() = default;

  static Config load(const std::string& path);
  // `base_dir` anchors relative paths.
  static Config parse(std::string_view text, std::string base_dir = ".");

  bool has(const std::string& key) const;
  // Throws ConfigError naming the key when it is absent.
  const std::string& get(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // Value resolved against the directory holding the config file.
  std::string path(const std::string& key) const;
  std::string path(const std::string& key, const std::string& fallback) const;
  std::vector<std::string> paths(const std::string& key) const;

  void set(const std::string& key, std::string value);

  const std::string& base_dir() const { return base_dir_; }
  const std::string& source_path() const { return source_path_; }
  // SHA-256 of the config text as read.
  const std::string& hash() const { return hash_; }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::string resolve(const std::string& p) const;

  std::map<std::string, std::string> values_;
  std::string base_dir_ = ".";
  std::string source_path_;
  std::string hash_;
};

// "2:1/2, 3:1/2, 4:1/3"
std::map<int, Rational> parse_psi(std::string_view text);

// [model] F, S, a_alpha, b_alpha, a_beta, b_beta.
Hyperparams hyperparams_from(const Config& cfg);
// [sampler] iterations, burn_in, thin, seed, threads, capped, psi, impute,
// augment_cap, impute_cap, probes, checkpoint_every; [output] L, selection.
// Not validated: callers apply overrides first.
SamplerConfig sampler_from(const Config& cfg, Selection default_selection);

std::string sha256_text(std::string_view text);

}  // namespace nestimpute
