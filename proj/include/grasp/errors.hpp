#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grasp {

/// Base for every error raised by the library. Input errors map to exit code 2
/// in the CLI and to 4xx responses in the service.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, schema or workload input. `line` is 1-based, 0 when the
/// error is not tied to a line.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Query text that does not conform to the grammar. `offset` is a byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Query that parses but cannot be evaluated, e.g. a filter on a non-numeric property.
class QueryError : public Error {
 public:
  using Error::Error;
};

/// Query form with no translation onto a summary (filtered queries).
class UnsupportedFeature : public Error {
 public:
  using Error::Error;
};

}  // namespace grasp
