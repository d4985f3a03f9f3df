#pragma once

#include <stdexcept>
#include <string>

namespace kolmo {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input-side failures: bad model, bad arguments, wrong case. The CLI maps these to exit 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// Numerical failures (non-convergence, no bracket, ...). The CLI maps these to exit 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ValidationError : public InputError {
public:
    using InputError::InputError;
};

/// |mu| outside the model's validity radius, or a query on an absent object.
class DomainError : public InputError {
public:
    using InputError::InputError;
};

/// The operation is not defined for the model's degeneracy case.
class CaseError : public InputError {
public:
    using InputError::InputError;
};

/// A curve's half-plane constraint does not hold at the requested point.
class SideConditionError : public InputError {
public:
    using InputError::InputError;
};

class IoError : public InputError {
public:
    using InputError::InputError;
};

class NonFinite : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double last_residual)
        : NumericalError(what + " (last residual " + std::to_string(last_residual) + ")"),
          last_residual_(last_residual) {}

    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotSingular : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DoubleZero : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotOnHopfCurve : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StepUnderflow : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace kolmo
