#ifndef ZGR_ERRORS_HPP
#define ZGR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zgr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configured cap exceeded (group-order cap, chain-depth cap).
struct SizeError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Syntax error in the group-spec DSL, with byte offset into the input.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// Operation called outside its contract (wrong parent group, k^m != 1 mod n, ...).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace zgr

#endif
