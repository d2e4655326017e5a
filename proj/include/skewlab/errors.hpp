#pragma once

#include <stdexcept>
#include <string>

namespace skewlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// A matrix failed density-operator validation (trace, positivity, eigen-floor).
class StateError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation (exponent, parameter, name).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterative eigensolver hit its sweep cap, or a quantity came out meaningfully negative.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix/report file or unreadable path.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewlab
