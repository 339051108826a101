#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An attribute or object index outside the table.
class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

// A decision table violating its shape or coding invariants.
class InvalidTableError : public Error {
 public:
  using Error::Error;
};

// Work refused because the input exceeds a configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}

  // 1-based physical line of the offending input, 0 when not line-bound.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MissingValueError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsar
