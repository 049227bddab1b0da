#include "lemni/verify.hpp"

#include <cassert>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>

#include <json.hpp>

#include "lemni/elliptic.hpp"
#include "lemni/series.hpp"
#include "lemni/weierstrass.hpp"

namespace lemni {

namespace {

const WeierstrassContext& shared_ctx() {
    static const WeierstrassContext ctx;
    return ctx;
}

const TaylorPair& shared_series() {
    static const TaylorPair tp;
    return tp;
}

double inf() { return std::numeric_limits<double>::infinity(); }

// Distance from z to spacing * Z[i].
double lattice_distance(double spacing, Complex z) {
    const double mx = std::round(z.real() / spacing);
    const double my = std::round(z.imag() / spacing);
    return std::abs(z - Complex(mx * spacing, my * spacing));
}

// Period lattice 2w Z[i] of wp.
double period_lattice_distance(const WeierstrassContext& ctx, Complex z) {
    return lattice_distance(2.0 * ctx.omega(), z);
}

// Half-period lattice w Z[i] (lattice points, half-periods, midpoints).
double half_lattice_distance(const WeierstrassContext& ctx, Complex z) {
    return lattice_distance(ctx.omega(), z);
}

// Pole set of S, C, P (also the branch points of s, c).
double pole_distance(const WeierstrassContext& ctx, Complex z) {
    return std::abs(z - nearest_pole(ctx, z));
}

IdentityReport scan(const std::string& name, const GridSpec& grid, double tol,
                    const std::function<double(Complex)>& singular_distance,
                    const std::function<double(Complex)>& residual) {
    if (grid.points_per_side < 2)
        throw domain_bound_error("run_suite: points_per_side must be >= 2");
    if (!(grid.half_width > 0.0))
        throw domain_bound_error("run_suite: half_width must be positive");
    if (grid.exclusion_radius < 0.0)
        throw domain_bound_error("run_suite: exclusion_radius must be >= 0");

    IdentityReport report;
    report.suite = name;
    report.grid = grid;
    report.tolerance = tol;
    const int n = grid.points_per_side;
    const double step = 2.0 * grid.half_width / (n - 1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const Complex z = grid.center +
                              Complex(-grid.half_width + i * step,
                                      -grid.half_width + j * step);
            if (singular_distance(z) < grid.exclusion_radius) {
                ++report.samples_excluded;
                continue;
            }
            assert(singular_distance(z) >= grid.exclusion_radius);
            const double r = residual(z);
            ++report.samples_evaluated;
            if (r > report.max_residual) {
                report.max_residual = r;
                report.argmax_point = z;
            }
        }
    }
    report.passed = report.max_residual <= tol;
    return report;
}

// Fixed second argument for the addition-formula suite.
const Complex kAddShift(0.31, 0.27);

struct SuiteDef {
    GridSpec grid;
    double tol;
    std::function<double(Complex)> singular_distance;
    std::function<double(Complex)> residual;
};

// Differentiated dense coefficient arrays for the ODE suites.
std::vector<double> derivative_coeffs(const std::vector<double>& f, int times,
                                      int order) {
    std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
    for (int n = 0; n <= order; ++n) {
        double w = 1.0;
        for (int k = 1; k <= times; ++k)
            w *= n + k;
        if (n + times < static_cast<int>(f.size()))
            out[n] = w * f[n + times];
    }
    return out;
}

SuiteDef make_suite(const std::string& name) {
    const WeierstrassContext& ctx = shared_ctx();
    const TaylorPair& tp = shared_series();
    const double w = ctx.omega();
    const double rt2 = std::sqrt(2.0);

    auto no_singularities = [](Complex) { return inf(); };
    auto on_period_lattice = [&ctx](Complex z) {
        return period_lattice_distance(ctx, z);
    };
    auto on_half_lattice = [&ctx](Complex z) {
        return half_lattice_distance(ctx, z);
    };
    auto on_poles = [&ctx](Complex z) { return pole_distance(ctx, z); };

    const GridSpec series_grid{{0.0, 0.0}, 0.6, 41, 0.0};
    const GridSpec cell_grid{{0.0, 0.0}, w, 31, 0.05};

    if (name == "quartic")
        return {series_grid, 1e-12, no_singularities, [&tp](Complex z) {
                    const Complex s = eval_s(tp, z);
                    const Complex c = eval_c(tp, z);
                    return std::abs(s * s * s * s + c * c * c * c - 1.0);
                }};
    if (name == "i_symmetry")
        return {series_grid, 1e-13, no_singularities, [&tp](Complex z) {
                    const Complex iz(-z.imag(), z.real());
                    const Complex i(0.0, 1.0);
                    return std::max(
                        std::abs(eval_s(tp, iz) - i * eval_s(tp, z)),
                        std::abs(eval_c(tp, iz) - eval_c(tp, z)));
                }};
    if (name == "reality")
        return {series_grid, 1e-15, no_singularities, [&tp](Complex z) {
                    return std::max(
                        std::abs(eval_s(tp, std::conj(z)) -
                                 std::conj(eval_s(tp, z))),
                        std::abs(eval_c(tp, std::conj(z)) -
                                 std::conj(eval_c(tp, z))));
                }};
    if (name == "wp_ode")
        return {cell_grid, 1e-9, on_period_lattice, [&ctx](Complex z) {
                    const Complex p = wp(ctx, z);
                    const Complex d = wp_prime(ctx, z);
                    return std::abs(d * d - (4.0 * p * p * p - p));
                }};
    if (name == "wp_dup")
        return {cell_grid, 1e-9, on_half_lattice, [&ctx](Complex z) {
                    return std::abs(wp_duplicate(ctx, z) - wp(ctx, 2.0 * z));
                }};
    if (name == "wp_add")
        return {cell_grid, 1e-9,
                [&ctx](Complex z) {
                    return std::min(
                        {period_lattice_distance(ctx, z),
                         period_lattice_distance(ctx, z + kAddShift),
                         period_lattice_distance(ctx, z - kAddShift)});
                },
                [&ctx](Complex z) {
                    return std::abs(wp_add(ctx, z, kAddShift) -
                                    wp(ctx, z + kAddShift));
                }};
    if (name == "wp_translate")
        return {cell_grid, 1e-9,
                [&ctx, w](Complex z) {
                    return std::min(
                        {period_lattice_distance(ctx, z),
                         period_lattice_distance(ctx, z - w),
                         period_lattice_distance(ctx, z - Complex(0.0, w)),
                         pole_distance(ctx, z)});
                },
                [&ctx, w](Complex z) {
                    const double r1 = std::abs(wp_translate_half(ctx, z) -
                                               wp(ctx, z - w));
                    // Sign identity via the iw translation:
                    // (wp(z-iw)^2-1/4)/(wp(z-iw)^2+1/4) = -wp(z)/(wp(z)^2+1/4).
                    const Complex x = wp(ctx, z - Complex(0.0, w));
                    const Complex p = wp(ctx, z);
                    const double r2 = std::abs(
                        (x * x - 0.25) / (x * x + 0.25) +
                        p / (p * p + 0.25));
                    return std::max(r1, r2);
                }};
    if (name == "wp_antisym")
        return {cell_grid, 1e-9, on_period_lattice, [&ctx](Complex z) {
                    const Complex iz(-z.imag(), z.real());
                    return std::abs(wp(ctx, iz) + wp(ctx, z));
                }};
    if (name == "periodicity")
        return {cell_grid, 1e-9, on_period_lattice, [&ctx, w](Complex z) {
                    const Complex p = wp(ctx, z);
                    return std::max(
                        std::abs(wp(ctx, z + 2.0 * w) - p),
                        std::abs(wp(ctx, z + Complex(0.0, 2.0 * w)) - p));
                }};
    if (name == "thm5_sc")
        return {series_grid, 1e-10, no_singularities,
                [&ctx, &tp, rt2](Complex z) {
                    const Complex sc = eval_s(tp, z) * eval_c(tp, z);
                    return std::max(
                        std::abs(sc - 0.5 * sd_eval(ctx, 2.0 * z)),
                        std::abs(sc - sl_eval(ctx, rt2 * z) / rt2));
                }};
    if (name == "thm6_C")
        return {series_grid, 1e-10, no_singularities, [&ctx, &tp](Complex z) {
                    const Complex c = eval_c(tp, z);
                    return std::abs(C_eval(ctx, z) - c * c);
                }};
    if (name == "thm7_S")
        return {series_grid, 1e-10, no_singularities, [&ctx, &tp](Complex z) {
                    const Complex s = eval_s(tp, z);
                    return std::abs(S_eval(ctx, z) - s * s);
                }};
    if (name == "sd_oracle")
        return {{{0.0, 0.0}, 0.7, 10, 0.0}, 1e-9,
                [w](Complex u) {
                    // sd poles sit at (1+i)w + 2w Z[i].
                    return lattice_distance(2.0 * w, u - Complex(w, w));
                },
                [&ctx](Complex u) {
                    return std::abs(sd_eval(ctx, u) - jacobi_sd_agm(u));
                }};
    if (name == "sd_sq_inv_wp")
        return {cell_grid, 1e-9,
                [&ctx, w](Complex u) {
                    return std::min(
                        period_lattice_distance(ctx, u),
                        lattice_distance(2.0 * w, u - Complex(w, w)));
                },
                [&ctx](Complex u) {
                    const Complex sd = sd_eval(ctx, u);
                    return std::abs(sd * sd * wp(ctx, u) - 1.0);
                }};
    if (name == "pythagorean_squares")
        return {{{0.0, 0.0}, w, 31, 0.05}, 1e-10, on_poles,
                [&ctx](Complex z) {
                    const Complex S = S_eval(ctx, z);
                    const Complex C = C_eval(ctx, z);
                    return std::abs(S * S + C * C - 1.0);
                }};
    if (name == "second_order_system") {
        const auto sq = std::make_shared<SquareSeries>(square_series(164));
        const auto d2S = std::make_shared<std::vector<double>>(
            derivative_coeffs(sq->S, 2, 160));
        const auto d2C = std::make_shared<std::vector<double>>(
            derivative_coeffs(sq->C, 2, 160));
        return {{{0.0, 0.0}, 0.6, 21, 0.0}, 1e-12, no_singularities,
                [sq, d2S, d2C](Complex z) {
                    const Complex S = eval_series(sq->S, 1, 0, z);
                    const Complex C = eval_series(sq->C, 1, 0, z);
                    const Complex rS = eval_series(*d2S, 1, 0, z) -
                                       (2.0 * C * C * C - 6.0 * S * S * C);
                    const Complex rC = eval_series(*d2C, 1, 0, z) -
                                       (2.0 * S * S * S - 6.0 * C * C * S);
                    return std::max(std::abs(rS), std::abs(rC));
                }};
    }
    if (name == "fourth_order_ode") {
        const auto sq = std::make_shared<SquareSeries>(square_series(164));
        const auto d4S = std::make_shared<std::vector<double>>(
            derivative_coeffs(sq->S, 4, 160));
        const auto d4C = std::make_shared<std::vector<double>>(
            derivative_coeffs(sq->C, 4, 160));
        return {{{0.0, 0.0}, 0.4, 21, 0.0}, 1e-12, no_singularities,
                [sq, d4S, d4C](Complex z) {
                    auto resid = [&z](const std::vector<double>& f,
                                      const std::vector<double>& d4) {
                        const Complex F = eval_series(f, 1, 0, z);
                        const Complex F2 = F * F;
                        const Complex rhs =
                            -12.0 * F * (32.0 * F2 * F2 - 40.0 * F2 + 9.0);
                        return std::abs(eval_series(d4, 1, 0, z) - rhs);
                    };
                    return std::max(resid(sq->S, *d4S), resid(sq->C, *d4C));
                }};
    }
    if (name == "briot_bouquet")
        return {{{0.25, 0.0}, 0.24, 8, 0.0}, 1e-6, no_singularities,
                [&ctx](Complex z) {
                    const double h = 1e-5;
                    const Complex Cd =
                        (C_eval(ctx, z + h) - C_eval(ctx, z - h)) / (2.0 * h);
                    const Complex C = C_eval(ctx, z);
                    const Complex one_m = 1.0 - C * C;
                    return std::abs(Cd * Cd * Cd * Cd -
                                    16.0 * C * C * one_m * one_m * one_m);
                }};
    if (name == "pole_probe")
        return {{{0.0, 0.0}, 0.5 * w, 2, 0.0}, 1e-9, no_singularities,
                [&ctx](Complex z) {
                    const Complex p = wp(ctx, z);
                    return std::abs(p * p + 0.25);
                }};
    if (name == "branch_sqrt")
        return {{{0.0, 0.0}, 0.87, 8, 0.0}, 1e-10, on_poles,
                [&ctx](Complex z) {
                    const Complex s = s_branch(ctx, z);
                    const Complex c = c_branch(ctx, z);
                    return std::abs(s * s * s * s + c * c * c * c - 1.0);
                }};

    std::string msg = "unknown suite '" + name + "'; valid suites:";
    for (const std::string& s : suite_names())
        msg += " " + s;
    throw usage_error(msg);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "quartic", "i_symmetry", "reality", "wp_ode", "wp_dup", "wp_add",
        "wp_translate", "wp_antisym", "periodicity", "thm5_sc", "thm6_C",
        "thm7_S", "sd_oracle", "sd_sq_inv_wp", "pythagorean_squares",
        "second_order_system", "fourth_order_ode", "briot_bouquet",
        "pole_probe", "branch_sqrt"};
    return names;
}

GridSpec default_grid(const std::string& suite) {
    return make_suite(suite).grid;
}

double default_tolerance(const std::string& suite) {
    return make_suite(suite).tol;
}

IdentityReport run_suite(const std::string& name, const GridSpec& grid,
                         Tolerance tol) {
    const SuiteDef def = make_suite(name);
    return scan(name, grid, tol.abs_tol, def.singular_distance, def.residual);
}

IdentityReport run_suite(const std::string& name) {
    const SuiteDef def = make_suite(name);
    return scan(name, def.grid, def.tol, def.singular_distance, def.residual);
}

std::vector<IdentityReport> run_all(ToleranceProfile profile) {
    const double scale = profile == ToleranceProfile::strict ? 0.1 : 1.0;
    std::vector<IdentityReport> reports;
    reports.reserve(suite_names().size());
    for (const std::string& name : suite_names()) {
        const SuiteDef def = make_suite(name);
        reports.push_back(scan(name, def.grid, def.tol * scale,
                               def.singular_distance, def.residual));
    }
    return reports;
}

namespace {

nlohmann::json report_json(const IdentityReport& r) {
    return nlohmann::json{
        {"suite", r.suite},
        {"grid",
         {{"center", {r.grid.center.real(), r.grid.center.imag()}},
          {"half_width", r.grid.half_width},
          {"points_per_side", r.grid.points_per_side},
          {"exclusion_radius", r.grid.exclusion_radius}}},
        {"samples_evaluated", r.samples_evaluated},
        {"samples_excluded", r.samples_excluded},
        {"max_residual", r.max_residual},
        {"argmax", {r.argmax_point.real(), r.argmax_point.imag()}},
        {"tolerance", r.tolerance},
        {"passed", r.passed}};
}

} // namespace

std::string report_to_json(const IdentityReport& report) {
    return report_json(report).dump(2);
}

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const IdentityReport& r : reports)
        arr.push_back(report_json(r));
    return arr.dump(2);
}

} // namespace lemni
