#pragma once

#include <string>
#include <vector>

#include "lemni/numerics.hpp"

namespace lemni {

/// Square sampling grid: points_per_side^2 samples over
/// [center - half_width, center + half_width]^2, row-major (imaginary part
/// outer, real part inner, both ascending). Samples within
/// exclusion_radius of the suite's singular set are skipped.
struct GridSpec {
    Complex center{0.0, 0.0};
    double half_width = 0.6;
    int points_per_side = 41;
    double exclusion_radius = 0.0;
};

struct IdentityReport {
    std::string suite;
    GridSpec grid;
    long long samples_evaluated = 0;
    long long samples_excluded = 0;
    double max_residual = 0.0;
    Complex argmax_point{0.0, 0.0};
    double tolerance = 0.0;
    bool passed = false;
};

enum class ToleranceProfile { standard, strict };

/// The twenty suite names, in canonical order.
const std::vector<std::string>& suite_names();

GridSpec default_grid(const std::string& suite);
double default_tolerance(const std::string& suite);

/// Runs one identity suite over the grid. Residuals are absolute, so only
/// tol.abs_tol participates in the pass/fail decision. Unknown names throw
/// usage_error listing the valid suites. Reports are deterministic:
/// identical inputs give bit-identical reports.
IdentityReport run_suite(const std::string& name, const GridSpec& grid,
                         Tolerance tol);
IdentityReport run_suite(const std::string& name);

/// Every suite with its default grid; strict divides tolerances by 10.
std::vector<IdentityReport> run_all(
    ToleranceProfile profile = ToleranceProfile::standard);

/// JSON with keys {suite, grid:{center:[re,im], half_width,
/// points_per_side, exclusion_radius}, samples_evaluated, samples_excluded,
/// max_residual, argmax:[re,im], tolerance, passed}; shortest round-trip
/// number rendering.
std::string report_to_json(const IdentityReport& report);
std::string reports_to_json(const std::vector<IdentityReport>& reports);

} // namespace lemni
