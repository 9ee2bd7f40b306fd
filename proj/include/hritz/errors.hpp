#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hritz {

// Invalid construction parameters or call preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index outside the supported range (basis index cap, rule order).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Input that carries no usable information (zero vector, all-noise samples).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t dim)
      : std::runtime_error(what), dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
};

// No sign change of the target function inside the requested bracket.
class BracketingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hritz
