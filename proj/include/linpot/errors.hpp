#pragma once

#include <stdexcept>
#include <string>

namespace linpot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside a profile or path domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Special-function argument or order outside the supported range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Quadrature failed to reach its tolerance; carries the best estimate.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double estimate, double error_estimate)
        : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

    double estimate() const { return estimate_; }
    double error_estimate() const { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

/// Kernel queried with t_b <= t_a.
class OrderingError : public Error {
public:
    using Error::Error;
};

/// Oscillator kernel evaluated at a focal point (v_s(t_b) = 0).
class CausticError : public Error {
public:
    using Error::Error;
};

/// Kernel oscillation not resolved by the sampling grid or node budget.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Translation too large for the periodic grid.
class WindowError : public Error {
public:
    using Error::Error;
};

/// Incompatible grids or malformed samples.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Grid too small to hold a state.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// Wave function reached the edge of the simulation box.
class BoundaryError : public Error {
public:
    using Error::Error;
};

/// Shift that does not land on grid points.
class CommensurabilityError : public Error {
public:
    using Error::Error;
};

/// Non-finite values encountered while evaluating a residual.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (CLI / JSON).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace linpot
