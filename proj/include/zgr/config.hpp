#ifndef ZGR_CONFIG_HPP
#define ZGR_CONFIG_HPP

#include <string>

namespace zgr {

inline constexpr const char* kToolVersion = "0.1.0";

// Runtime caps. Loadable from a flat `key = value` config file; every field
// has a working default so the library is usable without one.
struct Config {
  int order_cap = 512;      // largest group order build_group will produce
  int depth_cap = 16;       // largest delta-chain depth
  int default_depth = 12;   // depth used when a command does not pass --depth
  long torsion_bound = 100; // default bound for torsion_probe
  int workers = 4;          // catalog parallelism
  std::string cache_dir;    // empty: env ZGR_CACHE_DIR, else ./zgr-cache
};

// Parses `key = value` lines; '#' comments and [section] headers are ignored.
// Unknown keys are errors so typos do not silently fall back to defaults.
Config load_config_file(const std::string& path);

}  // namespace zgr

#endif
