#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace approach {

/// Flat sectioned text:
///
///   # comment
///   [section]
///   key = value
///
/// Keys are case-sensitive; a key may appear once per section.
class Config {
 public:
  static Config parse(std::string_view text, const std::string& source = "<config>");
  static Config load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  const std::string& get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key, const std::string& fallback) const;
  void set(const std::string& section, const std::string& key, std::string value);

  /// Canonical text: sections and keys in sorted order.
  std::string to_text() const;
  const std::map<std::string, std::map<std::string, std::string>>& sections() const noexcept {
    return sections_;
  }
  const std::string& source() const noexcept { return source_; }

  friend bool operator==(const Config& a, const Config& b) { return a.sections_ == b.sections_; }

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
  std::string source_;
};

/// Typed view of a run configuration. Unknown sections or keys are rejected
/// with a ConfigError naming "section.key".
struct RunConfig {
  // [scenario]
  std::string scenario = "example1";
  std::string target;  // optional override, TargetSet::parse syntax
  std::string norm;    // optional override: 1, 2, inf

  // [strategy]
  std::string strategy = "blocks";  // blocks | constant | blackwell
  std::string response = "xstar";
  std::string play;                 // weights for the constant strategy
  double regret_exponent = 0.0;     // 0: default max(2, 2 ln A)

  // [adversary]
  std::string adversary = "constant";  // constant | periodic | periodic_block | switching | random | script
  std::string points;                  // parameter points separated by ';'
  std::string weights;                 // random: probabilities over the points (default uniform)
  std::string anchor;                  // switching
  std::string other;                   // switching
  std::string switch_target;           // switching: payoff point to approach
  double eps0 = 0.1;
  std::string script;                  // script: path
  long adversary_seed = -1;            // -1: use the run seed

  // [run]
  long horizon = 1000;
  unsigned long seed = 1;
  std::string checkpoints = "geometric";  // geometric | dense:<every> | t1,t2,...
  std::string metrics = "phi_star";       // names separated by ';'
  bool audit = true;
  bool sampling = false;
  bool pointwise = false;
  double k_max = -1.0;
  std::string output;  // CSV file name (default <scenario>_<strategy>_<adversary>_s<seed>.csv)

  static RunConfig from(const Config& config);
  static RunConfig load(const std::string& path);
  Config to_config() const;
  std::string output_name() const;
};

}  // namespace approach
