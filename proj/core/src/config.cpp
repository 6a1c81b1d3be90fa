#include "approach/config.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "approach/error.hpp"

namespace approach {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Config Config::parse(std::string_view text, const std::string& source) {
  Config c;
  c.source_ = source;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    const std::string where = source + ":" + std::to_string(lineno);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where, "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section.empty()) throw ConfigError(where, "empty section name");
      c.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where, "expected key = value");
    if (section.empty()) throw ConfigError(where, "key outside of any section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ConfigError(where, "empty key");
    auto& sec = c.sections_[section];
    if (sec.count(key)) throw ConfigError(section + "." + key, "duplicate key");
    std::string value = line.substr(eq + 1);
    // Trailing comment: '#' preceded by whitespace.
    for (std::size_t i = 1; i < value.size(); ++i) {
      if (value[i] == '#' && (value[i - 1] == ' ' || value[i - 1] == '\t')) {
        value.resize(i);
        break;
      }
    }
    sec[key] = trim(value);
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

const std::string& Config::get(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  if (it == sections_.end() || !it->second.count(key)) {
    throw ConfigError(section + "." + key, "missing required key");
  }
  return it->second.at(key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

void Config::set(const std::string& section, const std::string& key, std::string value) {
  sections_[section][key] = std::move(value);
}

std::string Config::to_text() const {
  std::string out;
  bool first = true;
  for (const auto& [name, keys] : sections_) {
    if (!first) out += '\n';
    first = false;
    out += "[" + name + "]\n";
    for (const auto& [k, v] : keys) out += k + " = " + v + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- RunConfig

namespace {

struct Field {
  std::function<void(RunConfig&, const std::string&)> read;
  std::function<std::string(const RunConfig&)> write;
};

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key, "expected true or false, got '" + v + "'");
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

#define STRING_FIELD(member) \
  Field { [](RunConfig& c, const std::string& v) { c.member = v; }, [](const RunConfig& c) { return c.member; } }

const std::map<std::string, std::map<std::string, Field>>& schema() {
  static const std::map<std::string, std::map<std::string, Field>> s = {
      {"scenario",
       {{"name", STRING_FIELD(scenario)}, {"target", STRING_FIELD(target)}, {"norm", STRING_FIELD(norm)}}},
      {"strategy",
       {{"kind", STRING_FIELD(strategy)},
        {"response", STRING_FIELD(response)},
        {"play", STRING_FIELD(play)},
        {"regret_exponent",
         {[](RunConfig& c, const std::string& v) { c.regret_exponent = to_double("strategy.regret_exponent", v); },
          [](const RunConfig& c) { return num(c.regret_exponent); }}}}},
      {"adversary",
       {{"kind", STRING_FIELD(adversary)},
        {"points", STRING_FIELD(points)},
        {"weights", STRING_FIELD(weights)},
        {"anchor", STRING_FIELD(anchor)},
        {"other", STRING_FIELD(other)},
        {"target", STRING_FIELD(switch_target)},
        {"eps0",
         {[](RunConfig& c, const std::string& v) { c.eps0 = to_double("adversary.eps0", v); },
          [](const RunConfig& c) { return num(c.eps0); }}},
        {"script", STRING_FIELD(script)},
        {"seed",
         {[](RunConfig& c, const std::string& v) { c.adversary_seed = to_long("adversary.seed", v); },
          [](const RunConfig& c) { return std::to_string(c.adversary_seed); }}}}},
      {"run",
       {{"horizon",
         {[](RunConfig& c, const std::string& v) { c.horizon = to_long("run.horizon", v); },
          [](const RunConfig& c) { return std::to_string(c.horizon); }}},
        {"seed",
         {[](RunConfig& c, const std::string& v) {
            const long s = to_long("run.seed", v);
            if (s < 0) throw ConfigError("run.seed", "must be >= 0");
            c.seed = static_cast<unsigned long>(s);
          },
          [](const RunConfig& c) { return std::to_string(c.seed); }}},
        {"checkpoints", STRING_FIELD(checkpoints)},
        {"metrics", STRING_FIELD(metrics)},
        {"audit",
         {[](RunConfig& c, const std::string& v) { c.audit = to_bool("run.audit", v); },
          [](const RunConfig& c) { return std::string(c.audit ? "true" : "false"); }}},
        {"sampling",
         {[](RunConfig& c, const std::string& v) { c.sampling = to_bool("run.sampling", v); },
          [](const RunConfig& c) { return std::string(c.sampling ? "true" : "false"); }}},
        {"pointwise",
         {[](RunConfig& c, const std::string& v) { c.pointwise = to_bool("run.pointwise", v); },
          [](const RunConfig& c) { return std::string(c.pointwise ? "true" : "false"); }}},
        {"k_max",
         {[](RunConfig& c, const std::string& v) { c.k_max = to_double("run.k_max", v); },
          [](const RunConfig& c) { return num(c.k_max); }}},
        {"output", STRING_FIELD(output)}}},
  };
  return s;
}

#undef STRING_FIELD

}  // namespace

RunConfig RunConfig::from(const Config& config) {
  RunConfig c;
  const auto& s = schema();
  for (const auto& [section, keys] : config.sections()) {
    const auto sit = s.find(section);
    if (sit == s.end()) throw ConfigError(section, "unknown section");
    for (const auto& [key, value] : keys) {
      const auto kit = sit->second.find(key);
      if (kit == sit->second.end()) throw ConfigError(section + "." + key, "unknown key");
      kit->second.read(c, value);
    }
  }
  if (c.horizon < 1) throw ConfigError("run.horizon", "must be >= 1");
  return c;
}

RunConfig RunConfig::load(const std::string& path) { return from(Config::load(path)); }

Config RunConfig::to_config() const {
  Config out;
  const RunConfig defaults;
  for (const auto& [section, keys] : schema()) {
    for (const auto& [key, field] : keys) {
      const std::string v = field.write(*this);
      if (v != field.write(defaults) || section == "scenario" || section == "run") out.set(section, key, v);
    }
  }
  return out;
}

std::string RunConfig::output_name() const {
  if (!output.empty()) return output;
  return scenario + "_" + strategy + "_" + adversary + "_s" + std::to_string(seed) + ".csv";
}

}  // namespace approach
