#pragma once

#include <stdexcept>
#include <string>

namespace powerlaw {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, violated invariants, inconsistent config.
/// The CLI maps this family to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A cell or token could not be parsed; the message names row and column.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// An argument is outside the mathematical domain of the operation.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Series too short for the requested estimate.
class InsufficientDataError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Covariance rank too low for the requested component count.
class RankError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Numerical failure: non-convergence, divergence of all starts.
/// The CLI maps this family to exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A component has positive excess return but a zero penalty moment,
/// so its weight could grow without bound.
class DegeneratePenaltyError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Every component weight is zero; there is nothing to normalize or hold.
class EmptyPortfolioError : public Error {
public:
    using Error::Error;
};

} // namespace powerlaw
