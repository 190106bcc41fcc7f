#pragma once

#include <stdexcept>
#include <string>

namespace fermi1d {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by user input (bad config, unknown names, bad flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Errors raised while evaluating a numerical quantity.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NoBoundOrbit : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateTurningPoint : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SpectrumOverflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonIntegerParticleNumber : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PoleAtResonance : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ComplexResidual : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GridTooSmall : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ContinuumReached : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace fermi1d
