#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvm {

// Bad input: malformed documents, out-of-range parameters, contract
// violations detectable at the call boundary.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Edge-list or CSV parse failure; line() is 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exact solver was asked to run beyond its size limit. Callers are
// expected to fall back to a greedy bound.
class SizeLimitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvm
