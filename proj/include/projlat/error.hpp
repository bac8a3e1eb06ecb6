#pragma once

#include <stdexcept>
#include <string>

namespace projlat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different rings, or an internal invariant broke.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a documented constraint (degrees, primality, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DegreeUndefined : public PreconditionError {
 public:
  DegreeUndefined() : PreconditionError("degree undefined for the zero polynomial") {}
};

/// Groebner basis grew beyond the configured size guard.
class BasisCapExceeded : public Error {
 public:
  explicit BasisCapExceeded(std::size_t cap)
      : Error("Groebner basis exceeded the size cap of " + std::to_string(cap) + " elements") {}
};

}  // namespace projlat
