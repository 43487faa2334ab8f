#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wbu {

// Malformed user input (expression text, flags). Carries the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A well-formed request that the mathematics refuses (point off the variety, truncation cap, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails; reaching it means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wbu
