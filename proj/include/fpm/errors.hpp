#ifndef FPM_ERRORS_HPP
#define FPM_ERRORS_HPP

#include <stdexcept>

namespace fpm {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The alternating-series cancellation at the working precision cannot
/// meet the requested absolute error, and no alternative evaluation
/// route is available for the given arguments.
class CancellationBudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A provably nonnegative quantity came out significantly negative.
/// Signals a precision failure, not mathematics.
class NegativeResultAnomaly : public Error {
public:
  using Error::Error;
};

/// Moment Hankel matrix too ill-conditioned for orthogonalization.
class IllConditionedGram : public Error {
public:
  using Error::Error;
};

/// Bad run configuration (CLI flags or config file).
class InvalidConfig : public Error {
public:
  using Error::Error;
};

}  // namespace fpm

#endif
