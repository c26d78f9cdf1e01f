#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace askey {

/// A parameter lies outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A degree index exceeds the data available.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input is well formed but fails a validity requirement, such as Favard
/// positivity or a finite-support degree budget.
class ValidityError : public std::runtime_error {
 public:
  ValidityError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}

  /// The first degree index at which the requirement fails.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A moment sequence stops being positive definite at `order()`.
class MeasureDegeneracyError : public ValidityError {
 public:
  using ValidityError::ValidityError;
  std::size_t order() const noexcept { return index(); }
};

/// Malformed text input (family descriptors, CSV files, row names).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace askey
