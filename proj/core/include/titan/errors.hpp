#pragma once

#include <stdexcept>

namespace titan {

/// Base class for all titan errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument or precondition violation (value out of range, bad node id, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Value cannot be represented exactly on the configured grid.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A node program broke protocol rules (non-edge message, malformed
/// payload, phase misuse).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// A node failed to halt within the declared round budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Matrix rank deficiency where a unique solution is required.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Synthetic-instance generation gave up (e.g. rank check kept failing).
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace titan
