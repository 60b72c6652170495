#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unrel {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or file. `column` and `line` are 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0)
      : Error(format(what, column, line)), detail_(what), column_(column), line_(line) {}

  /// Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t line() const noexcept { return line_; }

private:
  static std::string format(const std::string& what, std::size_t column, std::size_t line) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ": ";
    if (column != 0) out += "column " + std::to_string(column) + ": ";
    return out + what;
  }

  std::string detail_;
  std::size_t column_;
  std::size_t line_;
};

/// Input that parses but violates a contract (unknown variable, width mismatch, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A configured cap (alphabet width, state count, enumeration bits) was exceeded.
class ResourceError : public Error {
public:
  ResourceError(std::string stage, const std::string& what)
      : Error(stage.empty() ? what : stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

/// Cooperative deadline expired.
class Timeout : public ResourceError {
public:
  explicit Timeout(std::string stage) : ResourceError(std::move(stage), "deadline exceeded") {}
};

}  // namespace unrel
