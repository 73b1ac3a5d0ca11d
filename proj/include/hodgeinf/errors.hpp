#pragma once

#include <stdexcept>
#include <string>

namespace hodgeinf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegralShift : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class NegativeMultiplicity : public Error {
 public:
  using Error::Error;
};

/// A full table that cannot come from a monodromy weight filtration.
class NotWeightMonotone : public Error {
 public:
  using Error::Error;
};

/// Local model data that does not describe an isolated singularity.
class NonIsolated : public Error {
 public:
  using Error::Error;
};

/// Global position data that drives a computed Hodge number negative.
class InconsistentGlobalData : public Error {
 public:
  using Error::Error;
};

/// A closed-form curve formula evaluated to a negative number.
class NegativeFormula : public Error {
 public:
  using Error::Error;
};

class AmbiguousResidue : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hodgeinf
