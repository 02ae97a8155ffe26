#pragma once

#include <stdexcept>
#include <string>

namespace pebble {

/// Invalid arguments, malformed constructions, misuse of solver entry points.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Failure while parsing a graph expression; carries the byte offset at which
/// the problem was detected.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace pebble
