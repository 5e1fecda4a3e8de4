#pragma once

#include <stdexcept>
#include <string>

namespace griemlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the chart domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The symmetric part g is (numerically) singular at a point.
class SingularMetricError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for on a structure it does not apply to
/// (wrong structure kind, singular A, indefinite metric, missing jet).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Mismatched tensor dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression, manifold spec or parameter.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace griemlab
