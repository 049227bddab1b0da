#pragma once

#include <functional>
#include <span>

#include "lemni/errors.hpp"

namespace lemni {

struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
};

/// Arithmetic-geometric mean of a, b > 0. The symmetric iteration
///   a' = (a+b)/2, b' = sqrt(ab)
/// converges quadratically; stops when |a-b| <= 4 eps max(a,b).
double agm(double a, double b);

/// Adaptive Gauss-Kronrod quadrature (G7/K15 panels, bisect worst panel)
/// of f over [a, b]. Throws accuracy_error if the panel budget is
/// exhausted before the requested tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 Tolerance tol = {});

/// z^n by binary powering, n any integer (negative n inverts).
Complex pow_int(Complex z, int n);

/// sum_k coeffs[k] * z^(offset + k*stride), evaluated by Horner's rule in
/// w = z^stride from the highest index down, then scaled by z^offset.
/// Bit-reproducible for fixed inputs. Domain policing (e.g. z = 0 with a
/// negative offset) is the caller's responsibility.
Complex eval_series(std::span<const double> coeffs, int stride, int offset,
                    Complex z);

} // namespace lemni
