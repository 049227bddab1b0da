#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lemni {

using Complex = std::complex<double>;

/// Evaluation point too close to a pole, lattice point, or branch point.
/// Carries the offending singular point.
class pole_proximity_error : public std::domain_error {
public:
    pole_proximity_error(const std::string& what, Complex nearest)
        : std::domain_error(what), nearest_(nearest) {}

    Complex nearest() const noexcept { return nearest_; }

private:
    Complex nearest_;
};

/// Argument outside a guarded domain (series disc, growth bound, ...).
class domain_bound_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An algebraic rearrangement hit a degenerate configuration
/// (e.g. the addition formula with wp(z) == wp(w)).
class degenerate_formula_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quadrature (or another iterative scheme) could not reach the requested
/// tolerance. Carries the best estimate achieved and its error bound.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// Two independent computations of the same quantity disagreed.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed request (unknown suite name, bad complex literal, ...).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lemni
