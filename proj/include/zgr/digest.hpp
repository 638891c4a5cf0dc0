#ifndef ZGR_DIGEST_HPP
#define ZGR_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace zgr {

// FNV-1a, 64 bit. Stable across platforms, which is all the cache and the
// canonical group hashes need.
class Digest {
 public:
  Digest() = default;

  Digest& feed(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= kPrime;
    }
    return *this;
  }

  Digest& feed(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= static_cast<unsigned char>(v >> (8 * i));
      state_ *= kPrime;
    }
    return *this;
  }

  Digest& feed(int v) { return feed(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = state_;
    for (int i = 15; i >= 0; --i) {
      out[i] = digits[v & 0xf];
      v >>= 4;
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kPrime = 1099511628211ull;
  std::uint64_t state_ = 14695981039346656037ull;
};

inline std::string digest_hex(std::string_view bytes) { return Digest().feed(bytes).hex(); }

}  // namespace zgr

#endif
