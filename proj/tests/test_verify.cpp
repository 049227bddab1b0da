#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lemni/verify.hpp"
#include "lemni/weierstrass.hpp"

using lemni::GridSpec;
using lemni::IdentityReport;

TEST_CASE("canonical suite list") {
    const std::vector<std::string> expected = {
        "quartic", "i_symmetry", "reality", "wp_ode", "wp_dup", "wp_add",
        "wp_translate", "wp_antisym", "periodicity", "thm5_sc", "thm6_C",
        "thm7_S", "sd_oracle", "sd_sq_inv_wp", "pythagorean_squares",
        "second_order_system", "fourth_order_ode", "briot_bouquet",
        "pole_probe", "branch_sqrt"};
    CHECK(lemni::suite_names() == expected);
}

TEST_CASE("single suite run carries its defaults") {
    const IdentityReport r = lemni::run_suite("quartic");
    CHECK(r.suite == "quartic");
    CHECK(r.grid.half_width == 0.6);
    CHECK(r.grid.points_per_side == 41);
    CHECK(r.grid.exclusion_radius == 0.0);
    CHECK(r.tolerance == 1e-12);
    CHECK(r.samples_evaluated + r.samples_excluded ==
          static_cast<long long>(r.grid.points_per_side) *
              r.grid.points_per_side);
    CHECK(r.samples_excluded == 0);
    CHECK(r.max_residual < r.tolerance);
    CHECK(r.passed);
    CHECK(std::abs(r.argmax_point.real()) <= 0.6 + 1e-15);
    CHECK(std::abs(r.argmax_point.imag()) <= 0.6 + 1e-15);
}

TEST_CASE("every default suite passes") {
    const auto reports = lemni::run_all();
    REQUIRE(reports.size() == lemni::suite_names().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        INFO(reports[i].suite);
        CHECK(reports[i].suite == lemni::suite_names()[i]);
        CHECK(reports[i].passed);
        CHECK(reports[i].max_residual <= reports[i].tolerance);
        CHECK(reports[i].samples_evaluated > 0);
        CHECK(reports[i].samples_evaluated + reports[i].samples_excluded ==
              static_cast<long long>(reports[i].grid.points_per_side) *
                  reports[i].grid.points_per_side);
    }
}

TEST_CASE("strict profile scales every tolerance by ten") {
    const auto loose = lemni::run_all(lemni::ToleranceProfile::standard);
    const auto tight = lemni::run_all(lemni::ToleranceProfile::strict);
    REQUIRE(loose.size() == tight.size());
    for (std::size_t i = 0; i < loose.size(); ++i) {
        INFO(loose[i].suite);
        CHECK(tight[i].tolerance == doctest::Approx(0.1 * loose[i].tolerance)
                                        .epsilon(1e-15));
        CHECK(tight[i].max_residual == loose[i].max_residual);
        CHECK(tight[i].passed == (tight[i].max_residual <= tight[i].tolerance));
    }
}

TEST_CASE("reports are bit-deterministic") {
    const IdentityReport a = lemni::run_suite("wp_ode");
    const IdentityReport b = lemni::run_suite("wp_ode");
    CHECK(lemni::report_to_json(a) == lemni::report_to_json(b));
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.argmax_point.real() == b.argmax_point.real());
    CHECK(a.argmax_point.imag() == b.argmax_point.imag());
}

TEST_CASE("unknown suites are rejected with the valid list") {
    try {
        lemni::run_suite("no_such_suite");
        FAIL("expected usage_error");
    } catch (const lemni::usage_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("no_such_suite") != std::string::npos);
        CHECK(msg.find("pole_probe") != std::string::npos);
    }
}

TEST_CASE("grid validation") {
    const lemni::Tolerance tol{1e-9, 1e-9};
    CHECK_THROWS_AS(lemni::run_suite("quartic", {{0.0, 0.0}, 0.5, 1, 0.0}, tol),
                    lemni::domain_bound_error);
    CHECK_THROWS_AS(lemni::run_suite("quartic", {{0.0, 0.0}, 0.0, 5, 0.0}, tol),
                    lemni::domain_bound_error);
    CHECK_THROWS_AS(lemni::run_suite("quartic", {{0.0, 0.0}, 0.5, 5, -0.1}, tol),
                    lemni::domain_bound_error);
}

TEST_CASE("custom grids and vacuous exclusion") {
    const IdentityReport small =
        lemni::run_suite("quartic", {{0.0, 0.0}, 0.3, 5, 0.0}, {1e-12, 1e-12});
    CHECK(small.samples_evaluated == 25);
    CHECK(small.samples_excluded == 0);
    CHECK(small.passed);

    // An exclusion radius that swallows the whole grid: nothing evaluated,
    // vacuously passing, zero residual.
    const double w = lemni::lemniscate_omega();
    const IdentityReport empty =
        lemni::run_suite("wp_ode", {{0.0, 0.0}, w, 2, 10.0}, {1e-9, 1e-9});
    CHECK(empty.samples_evaluated == 0);
    CHECK(empty.samples_excluded == 4);
    CHECK(empty.max_residual == 0.0);
    CHECK(empty.passed);
}

TEST_CASE("larger exclusions never raise the residual") {
    const double w = lemni::lemniscate_omega();
    const lemni::Tolerance tol{1e-9, 1e-9};
    double prev = std::numeric_limits<double>::infinity();
    for (const double excl : {0.05, 0.1, 0.2, 0.4}) {
        const IdentityReport r =
            lemni::run_suite("wp_ode", {{0.0, 0.0}, w, 31, excl}, tol);
        CHECK(r.max_residual <= prev);
        prev = r.max_residual;
    }
}

TEST_CASE("pole probe hits the four base poles") {
    const IdentityReport r = lemni::run_suite("pole_probe");
    CHECK(r.grid.points_per_side == 2);
    CHECK(r.samples_evaluated == 4);
    CHECK(r.samples_excluded == 0);
    CHECK(r.passed);
}

TEST_CASE("json report shape") {
    const IdentityReport r = lemni::run_suite("reality");
    const nlohmann::json j = nlohmann::json::parse(lemni::report_to_json(r));
    CHECK(j["suite"] == "reality");
    CHECK(j["grid"]["half_width"] == 0.6);
    CHECK(j["grid"]["points_per_side"] == 41);
    CHECK(j["grid"]["center"].size() == 2);
    CHECK(j["grid"]["exclusion_radius"] == 0.0);
    CHECK(j["samples_evaluated"].is_number_integer());
    CHECK(j["samples_excluded"].is_number_integer());
    CHECK(j["max_residual"].is_number());
    CHECK(j["argmax"].size() == 2);
    CHECK(j["tolerance"].is_number());
    CHECK(j["passed"].is_boolean());

    const auto both = lemni::run_all();
    const nlohmann::json arr = nlohmann::json::parse(lemni::reports_to_json(both));
    REQUIRE(arr.is_array());
    CHECK(arr.size() == both.size());
    CHECK(arr[0]["suite"] == "quartic");
}
