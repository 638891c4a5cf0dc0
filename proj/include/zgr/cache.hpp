#ifndef ZGR_CACHE_HPP
#define ZGR_CACHE_HPP

#include <atomic>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace zgr {

/// Content-addressed result store: one JSON file per entry, named by the
/// digest of (group hash, operation, parameters, tool version). Entries are
/// written to a temp file and renamed, so concurrent writers are safe.
/// A hit returns the stored value verbatim, which is byte-identical to a
/// recomputation because every producer serializes deterministically.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  static std::string make_key(const std::string& group_hash, const std::string& op,
                              const nlohmann::json& params);

  std::optional<nlohmann::json> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& op, const nlohmann::json& value) const;

  nlohmann::json get_or_compute(const std::string& group_hash, const std::string& op,
                                const nlohmann::json& params,
                                const std::function<nlohmann::json()>& compute) const;

  long hits() const { return hits_.load(); }
  long misses() const { return misses_.load(); }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::atomic<long> hits_{0};
  mutable std::atomic<long> misses_{0};
};

}  // namespace zgr

#endif
