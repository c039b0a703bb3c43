#pragma once

#include <stdexcept>
#include <string>

namespace slipdrop {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violation: bad parameters, malformed state, inconsistent input.
struct InvalidInput : Error {
    using Error::Error;
};

/// Operation called for a slip regime it does not support.
struct RegimeError : Error {
    using Error::Error;
};

/// Numerical failure: lost pivot, non-converged quadrature, localization failure.
struct NumericalError : Error {
    using Error::Error;
};

/// Adaptive step size fell below its lower bound.
struct StiffnessError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace slipdrop
