#include "zgr/config.hpp"

#include <fstream>

#include "zgr/errors.hpp"

namespace zgr {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

long parse_long(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    long out = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' needs an integer, got '" + v + "'");
  }
}

}  // namespace

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || (line.front() == '[' && line.back() == ']')) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + " is not 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (key == "order_cap")
      cfg.order_cap = static_cast<int>(parse_long(value, key));
    else if (key == "depth_cap")
      cfg.depth_cap = static_cast<int>(parse_long(value, key));
    else if (key == "default_depth")
      cfg.default_depth = static_cast<int>(parse_long(value, key));
    else if (key == "torsion_bound")
      cfg.torsion_bound = parse_long(value, key);
    else if (key == "workers")
      cfg.workers = static_cast<int>(parse_long(value, key));
    else if (key == "cache_dir")
      cfg.cache_dir = value;
    else
      throw ConfigError("unknown config key '" + key + "' on line " + std::to_string(lineno));
  }
  if (cfg.order_cap < 1 || cfg.depth_cap < 1 || cfg.default_depth < 1 || cfg.default_depth > cfg.depth_cap)
    throw ConfigError("config caps out of range");
  return cfg;
}

}  // namespace zgr
