#pragma once

#include <stdexcept>
#include <string>

namespace oscint {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (lambda <= 0, x >= 1 for Li_k, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A named catalog parameter failed validation.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Coefficient table expected to be conjugate-symmetric but is not.
class ParityError : public Error {
public:
    using Error::Error;
};

// A sampling node landed on a declared singularity.
class SamplingError : public Error {
public:
    SamplingError(const std::string& what, double node) : Error(what), node_(node) {}
    double node() const noexcept { return node_; }

private:
    double node_;
};

// An iterative evaluation did not reach its tolerance.  Carries the best
// estimate obtained and the error bound achieved with it.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double achieved_bound)
        : Error(what), best_(best_estimate), bound_(achieved_bound) {}

    double best_estimate() const noexcept { return best_; }
    double achieved_bound() const noexcept { return bound_; }

private:
    double best_;
    double bound_;
};

class UnknownEntryError : public Error {
public:
    using Error::Error;
};

}  // namespace oscint
