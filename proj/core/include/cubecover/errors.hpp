#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubecover {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A value or instance exceeds a configured capacity (lcm cap, point cap, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input is valid but outside the supported model (e.g. non-square-free lcm).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A checked precondition does not hold (e.g. a theorem check on a non-exact
/// system).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Argument outside its domain (bad index, value out of range, t = n/2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure: a result failed its own re-verification.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubecover
