#pragma once

#include <stdexcept>
#include <string>

namespace amzeta {

/// Precondition violated by the caller (bad prime, mismatched fields, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inverse of zero in a field, or division by the zero polynomial.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed a configured size bound. `required()` names the
/// size that would have been needed, as a decimal string.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::string required)
      : std::runtime_error(what), required_(std::move(required)) {}

  const std::string& required() const noexcept { return required_; }

 private:
  std::string required_;
};

/// Prime search ran past its step cap.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace amzeta
