#pragma once

#include <stdexcept>
#include <string>

namespace oscover {

// Violation of an operation's precondition (parity, range, realizability).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form was asked for outside the range where it is stated.
class UnsupportedFormError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Declared certificate data contradicts what the lattice computes.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace oscover
