#pragma once

#include <stdexcept>
#include <string>

namespace dec {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input to an operation (shape mismatch, degree out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The mesh is not a valid conforming simplicial complex, or it is not
/// well-centered where that is required.
class MeshError : public Error {
public:
    using Error::Error;
};

/// Malformed mesh or report file.
class FormatError : public Error {
public:
    using Error::Error;
};

/// The iterative solver did not reach the requested tolerance.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double best_residual, int iterations)
        : Error(what), best_residual_(best_residual), iterations_(iterations)
    {
    }

    double best_residual() const noexcept { return best_residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double best_residual_;
    int iterations_;
};

}  // namespace dec
