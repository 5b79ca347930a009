#pragma once

#include <stdexcept>
#include <string>

namespace pf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-finite or otherwise malformed input.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Input outside the physical or mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Perturbative parameter beyond the first-order validity threshold.
class ValidityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Quantum numbers or orders for which no closed form is implemented.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_estimate)
        : Error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

class BracketingError : public Error {
public:
    using Error::Error;
};

}  // namespace pf
