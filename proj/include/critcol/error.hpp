#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace critcol {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text, pattern text or database file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset,
             std::optional<std::size_t> line = std::nullopt)
      : Error(format(what, offset, line)), detail_(what), offset_(offset), line_(line) {}

  /// The message without position information.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t offset() const noexcept { return offset_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& what, std::size_t offset,
                            std::optional<std::size_t> line) {
    std::string s = what + " at byte offset " + std::to_string(offset);
    if (line) s += " on line " + std::to_string(*line);
    return s;
  }

  std::string detail_;
  std::size_t offset_;
  std::optional<std::size_t> line_;
};

/// Out-of-range vertex, invalid parameter, overlapping sets.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the graph class an operation is defined for.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its node or size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace critcol
