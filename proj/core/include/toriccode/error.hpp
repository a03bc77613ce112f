#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toric {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad clutter, non-prime p, q = 2, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration / time budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required)
      : Error(what), required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

// Exact integer arithmetic left the representable range.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
