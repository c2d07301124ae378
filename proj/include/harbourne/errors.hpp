#pragma once

#include <stdexcept>
#include <string>

namespace harbourne {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, unknown keys, r < 2 keys, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configuration profile that fails one of its invariants.
class InvalidProfile : public Error {
 public:
  using Error::Error;
};

/// An inequality or transformation applied outside its hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic failure that is not a hypothesis violation (e.g. no singular
/// points to blow up).
class ComputationError : public Error {
 public:
  using Error::Error;
};

enum class GeometryErrorKind {
  IntersectionOutsideField,
  NonTransversalIntersection,
  MixedClasses,
  DegreeOutOfRange,
  ContractedCurve,
  ReducibleCurve,
  InvalidCurve,
  InvalidPoint,
  BasePoint,
  NotOnCurve,
  ProportionalCurves,
  FieldMismatch,
  InvalidField,
};

const char* to_string(GeometryErrorKind kind) noexcept;

class GeometryError : public Error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  GeometryErrorKind kind() const noexcept { return kind_; }

 private:
  GeometryErrorKind kind_;
};

}  // namespace harbourne
