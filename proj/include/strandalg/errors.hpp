#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strandalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown names, broken words, bad DSL syntax. Carries a
// 1-based position when one is known (0 means "no position").
class InputError : public Error {
 public:
  explicit InputError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Attempt to compose paths whose endpoints do not match. This is a usage
// error, not the zero element of the path algebra.
class CompositionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSpecialError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed to hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace strandalg
