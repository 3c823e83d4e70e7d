#pragma once

#include <stdexcept>
#include <string>

namespace jslope {

// All library failures derive from Error so callers can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, knot specs, data files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on mathematical input failed (non-coprime torus pair, even p, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The bracket engine exceeded its configured frontier or term budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Quasi-polynomial fitting could not explain the sequence in the sample window.
class FitError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant broke (non-exact division, non-integral result).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jslope
