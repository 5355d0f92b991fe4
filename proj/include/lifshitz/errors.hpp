// errors.hpp
//
// Exception hierarchy for the numerical core. Every failure raised by an
// operation derives from NumericalError and its message starts with the
// operation name, so front ends can report "which step failed" verbatim.
#ifndef LIFSHITZ_ERRORS_HPP
#define LIFSHITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lifshitz {

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's mathematical domain.
class DomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Successive refinements disagree by more than the requested tolerance.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A structural constraint on the parameters does not hold (e.g. z != 4).
class ConstraintError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Quadrature window truncates a non-negligible tail.
class GridCoverageError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class FitError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class CutoffMismatchError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Blackening function vanishes or turns negative inside the radial domain.
class NonPositiveBlackeningError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// The truncated w-form integrand takes the square root of a negative number.
class ImaginaryIntegrandError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

namespace detail {

template <typename Error>
[[noreturn]] inline void fail(const char* op, const std::string& what) {
    throw Error(std::string(op) + ": " + what);
}

}  // namespace detail
}  // namespace lifshitz

#endif  // LIFSHITZ_ERRORS_HPP
