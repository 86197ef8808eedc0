#pragma once

#include <stdexcept>
#include <string>

namespace pmc {

// Numerical failures (exit code 3 in the CLI).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A jet operation left its domain (division by ~0, sqrt/log of a non-positive value).
class JetDomainError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

// A derivative was requested beyond the order carried by a jet.
class JetOrderError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class DegenerateMetricError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class ConstraintViolationError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class SingularOperatorError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

// Caller-side problems: bad arguments, unknown ids, violated preconditions
// (exit code 2 in the CLI).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

class MinimalSurfaceError : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class NotNormalError : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

} // namespace pmc
