#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bqsm {

/// Dense simulation requested beyond the configured qubit cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A party read past an undelivered channel boundary or otherwise broke the
/// message order of a protocol.
class ProtocolViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An adversary retained more quantum memory than its declared bound.
class BoundViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bqsm
