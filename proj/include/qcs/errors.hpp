#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A 1-based rank fell outside [1, sample size].
class RankOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An observed experiment is missing one of its arms.
class EmptyArm : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its assignment budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qcs
