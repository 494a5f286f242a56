#pragma once

#include <stdexcept>
#include <string>

namespace gradalg {

/// Malformed or inconsistent input: shape or field mismatch, bad document,
/// violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear map that was claimed to be an algebra homomorphism is not one.
class NotAHomError : public InputError {
 public:
  using InputError::InputError;
};

/// A bounded search or enumeration ran out of budget before it could answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is outside what the library implements (infinite fields for
/// the tilde product, infinite groups where a finite table is required).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed a consistency check that should hold by
/// construction.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gradalg
