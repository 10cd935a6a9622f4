#pragma once

#include <stdexcept>
#include <string>

namespace anomalab {

// Base for all library errors. The C API maps subclasses to status codes:
// invalid-input errors -> 2, numerical failures -> 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid-input family.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Product of expressions living on different affine arguments.
class ArgMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Operation restricted to a subset of affine arguments (e.g. Fourier on pure-x).
class UnsupportedArg : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class IntegrabilityViolation : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DomainError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class EmptyMeasurement : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ValidationError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Numerical-failure family.
class NumericalError : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class GridUnderResolved : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StepUnderflow : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class Instability : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class FitDegenerate : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace anomalab
