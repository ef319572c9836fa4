#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grpverify {

// A computation would exceed one of the configured size caps.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A per-claim deadline elapsed inside a long-running loop.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group expression; offset is a byte offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace grpverify
