#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpnum {

/// Raised when an operation receives arguments outside its domain
/// (out-of-range vertex, unsupported parameters, disconnected input where a
/// connected graph is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the graph readers. `offset()` is the byte position of the first
/// offending input byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gpnum
