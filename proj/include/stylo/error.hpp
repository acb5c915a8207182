#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stylo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Dependency tree violates single-root / acyclicity / head-range invariants.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but semantically invalid (ranges, duplicates, unknown ids).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A statistic is undefined for the given data (constant input, all ties, zero vector).
class UndefinedStatistic : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylo
