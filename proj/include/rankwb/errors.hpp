#pragma once

#include <stdexcept>
#include <string>

namespace rankwb {

/// Base of every exception thrown by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad field spec, size mismatch, broken table, bad JSON.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two operands live over different fields.
class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A construction would exceed the configured matrix-size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rankwb
