// errors.hpp: exception types shared by the gbomb library.

#pragma once

#include <stdexcept>
#include <string>

namespace gbomb {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical precondition failed (singular input, eigenvalue on the log branch cut, ...).
/// The CLI maps this family to exit code 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class SingularInput : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An eigenvalue lies on the closed negative real axis, so the principal logarithm
/// is undefined. For interpolation generators this means the step duration is too
/// large; halving it is the usual remedy.
class BranchCutEigenvalue : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotHermitian : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidState : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidAncillaState : public InvalidState {
public:
    using InvalidState::InvalidState;
};

class InvalidSetup : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class MalformedSeries : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A computed result broke an invariant it is guaranteed to satisfy (CLI exit code 3).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace gbomb
