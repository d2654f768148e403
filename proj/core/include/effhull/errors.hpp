#pragma once

#include <stdexcept>
#include <string>

namespace effhull {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Tolerance or iteration-budget configuration is unusable (negative, NaN, zero budget).
class InvalidToleranceError : public Error {
 public:
  using Error::Error;
};

// Input rows do not form a square matrix.
class NonSquareError : public Error {
 public:
  using Error::Error;
};

// An entry that must be strictly positive (and finite) is not.
class NonPositiveEntryError : public Error {
 public:
  using Error::Error;
};

// a_ij * a_ji deviates from 1 beyond tolerance. Indices are 1-based.
class NotReciprocalError : public Error {
 public:
  NotReciprocalError(int row, int col, double residual)
      : Error("entry (" + std::to_string(row) + "," + std::to_string(col) +
              ") breaks reciprocity: |a_ij*a_ji - 1| = " + std::to_string(residual)),
        row_(row),
        col_(col),
        residual_(residual) {}
  int row() const { return row_; }
  int col() const { return col_; }
  double residual() const { return residual_; }

 private:
  int row_;
  int col_;
  double residual_;
};

// Vector/matrix dimensions disagree.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// The operation needs a larger dimension than was given.
class DimensionTooSmallError : public Error {
 public:
  using Error::Error;
};

// An index is outside the valid range.
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// A selection produced an empty matrix or vector.
class EmptyResultError : public Error {
 public:
  using Error::Error;
};

// Iterative method hit its iteration budget before meeting tolerance.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what_arg, long iterations)
      : Error(what_arg), iterations_(iterations) {}
  long iterations() const { return iterations_; }

 private:
  long iterations_;
};

// A documented precondition of the call does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The matrix does not have the structural form the routine requires.
class FormError : public Error {
 public:
  using Error::Error;
};

// More than three above-diagonal entries stay perturbed under every rebasing.
class NotTriplePerturbedError : public Error {
 public:
  using Error::Error;
};

// No candidate permutation brings the block into a recognized canonical shape.
class CanonicalizationError : public Error {
 public:
  using Error::Error;
};

// Parameters fall outside every recognized canonical condition.
class ConditionError : public Error {
 public:
  using Error::Error;
};

// A witness was requested but the hull is contained in the efficient set.
class HullContainedError : public Error {
 public:
  using Error::Error;
};

// The witness search exhausted its epsilon schedule without certifying a vector.
class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

// The vector is not efficient, so the requested decomposition does not exist.
class NotEfficientError : public Error {
 public:
  using Error::Error;
};

// A parameter value makes the formula degenerate (division by zero).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A file or text payload could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace effhull
