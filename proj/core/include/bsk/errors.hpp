#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsk {

// Base for every error raised by the engine. The CLI maps subclasses onto
// process exit classes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings, or a value does not fit its ring.
class ContextError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Bad configuration: non-prime characteristic, too many variables, a field
// too small for generic constructions.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap was hit. `partial_size` records how far the
// computation got (basis length, enumerated points, ...).
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t partial_size = 0)
      : Error(what), partial_size_(partial_size) {}
  std::size_t partial_size() const noexcept { return partial_size_; }

 private:
  std::size_t partial_size_;
};

// Violated engine invariant. Raised only when a proved identity fails to
// check, which means a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bsk
