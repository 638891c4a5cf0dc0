#include "zgr/cache.hpp"

#include <unistd.h>

#include <chrono>
#include <fstream>

#include "zgr/config.hpp"
#include "zgr/digest.hpp"
#include "zgr/errors.hpp"

namespace zgr {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::string ResultCache::make_key(const std::string& group_hash, const std::string& op,
                                  const nlohmann::json& params) {
  Digest d;
  d.feed(group_hash).feed("\x1f").feed(op).feed("\x1f").feed(params.dump()).feed("\x1f").feed(
      kToolVersion);
  return d.hex();
}

std::optional<nlohmann::json> ResultCache::lookup(const std::string& key) const {
  fs::path file = dir_ / (key + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.contains("value")) return std::nullopt;  // corrupt: recompute
  return entry.at("value");
}

void ResultCache::store(const std::string& key, const std::string& op,
                        const nlohmann::json& value) const {
  auto now = std::chrono::system_clock::now().time_since_epoch();
  nlohmann::json entry{
      {"key", key},
      {"op", op},
      {"tool_version", kToolVersion},
      {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
      {"value", value}};
  fs::path file = dir_ / (key + ".json");
  fs::path tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()) + "." +
                         std::to_string(reinterpret_cast<std::uintptr_t>(&entry)));
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache entry " + tmp.string());
    out << entry.dump(2) << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename cache entry into place: " + ec.message());
  }
}

nlohmann::json ResultCache::get_or_compute(const std::string& group_hash, const std::string& op,
                                           const nlohmann::json& params,
                                           const std::function<nlohmann::json()>& compute) const {
  std::string key = make_key(group_hash, op, params);
  if (auto hit = lookup(key)) {
    ++hits_;
    return *hit;
  }
  ++misses_;
  nlohmann::json value = compute();
  store(key, op, value);
  return value;
}

}  // namespace zgr
