#pragma once

#include <stdexcept>
#include <string>

namespace cp1 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a documented invariant (non-symmetric form, bad w2, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Fixed-width integer arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// find_isomorphism visited more search nodes than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cp1
