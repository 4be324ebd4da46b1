#pragma once

#include <stdexcept>
#include <string>

namespace pec {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (coefficients, CSV cells, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The all-zero coefficient matrix, rejected at construction.
class InvalidConic : public Error {
 public:
  using Error::Error;
};

/// Arithmetic outside the value domain (division by zero, sqrt of negative).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Angle requested between vectors of different causal kind.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Angle requested for vectors whose cosh expression is below 1.
class OutOfSector : public Error {
 public:
  using Error::Error;
};

/// No real pseudo-Euclidean values exist (case (iii) matrices).
class NoRealPEValues : public Error {
 public:
  using Error::Error;
};

/// The quadratic form admits no finite diagonalizing rotation.
class NotDiagonalizable : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined for this conic class.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Constructor parameters violate a side condition.
class BadParams : public Error {
 public:
  using Error::Error;
};

/// Taxonomy identifier not in the fixed table.
class UnknownId : public Error {
 public:
  using Error::Error;
};

/// A sample point handed to an oracle does not lie on the conic.
class SampleOffConic : public Error {
 public:
  using Error::Error;
};

/// Unreachable classifier state; indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pec
