#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lemni/elliptic.hpp"
#include "lemni/format.hpp"
#include "lemni/series.hpp"
#include "lemni/verify.hpp"
#include "lemni/weierstrass.hpp"

namespace {

using lemni::Complex;
using nlohmann::json;

struct CliConfig {
    std::string format = "json";
    int digits = 15;
};

const lemni::WeierstrassContext& ctx() {
    static const lemni::WeierstrassContext c;
    return c;
}

// High-order pair so s and c cover the whole guarded disc.
const lemni::TaylorPair& cli_series() {
    static const lemni::TaylorPair tp(768);
    return tp;
}

Complex eval_fn(const std::string& fn, Complex z) {
    if (fn == "s")
        return lemni::eval_s(cli_series(), z);
    if (fn == "c")
        return lemni::eval_c(cli_series(), z);
    if (fn == "S")
        return lemni::S_eval(ctx(), z);
    if (fn == "C")
        return lemni::C_eval(ctx(), z);
    if (fn == "P")
        return lemni::P_eval(ctx(), z);
    if (fn == "sl")
        return lemni::sl_eval(ctx(), z);
    if (fn == "sd")
        return lemni::sd_eval(ctx(), z);
    if (fn == "wp")
        return lemni::wp(ctx(), z);
    if (fn == "wp_prime")
        return lemni::wp_prime(ctx(), z);
    throw lemni::usage_error("unknown function '" + fn + "'");
}

// Distance to the named function's own singular set, for grid exclusions.
double singular_distance(const std::string& fn, Complex z) {
    static const double rt2 = std::sqrt(2.0);
    if (fn == "S" || fn == "C" || fn == "P")
        return std::abs(z - lemni::nearest_pole(ctx(), z));
    if (fn == "sl")
        return rt2 * std::abs(z / rt2 - lemni::nearest_pole(ctx(), z / rt2));
    if (fn == "sd")
        return 2.0 * std::abs(0.5 * z - lemni::nearest_pole(ctx(), 0.5 * z));
    if (fn == "wp" || fn == "wp_prime")
        return std::abs(lemni::reduce(ctx(), z).z0);
    return std::numeric_limits<double>::infinity();
}

int cmd_constants(const CliConfig& cfg) {
    const double omega = lemni::lemniscate_omega();
    const lemni::RadiusConstants rc = lemni::radius_constants();
    if (cfg.format == "json") {
        const json out{
            {"picard_radius", rc.picard_radius},
            {"scalar_radius", rc.scalar_radius},
            {"omega", omega},
            {"omega_over_sqrt2", rc.true_radius},
            {"periods", {{2.0 * omega, 0.0}, {0.0, 2.0 * omega}}},
            {"g2", ctx().g2()},
            {"g3", ctx().g3()}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const int d = cfg.digits;
    std::cout << "key,value\n"
              << "picard_radius," << lemni::format_double(rc.picard_radius, d) << "\n"
              << "scalar_radius," << lemni::format_double(rc.scalar_radius, d) << "\n"
              << "omega," << lemni::format_double(omega, d) << "\n"
              << "omega_over_sqrt2," << lemni::format_double(rc.true_radius, d) << "\n"
              << "period_1," << lemni::format_complex(Complex(2.0 * omega, 0.0), d) << "\n"
              << "period_2," << lemni::format_complex(Complex(0.0, 2.0 * omega), d) << "\n"
              << "g2," << lemni::format_double(ctx().g2(), d) << "\n"
              << "g3," << lemni::format_double(ctx().g3(), d) << "\n";
    return 0;
}

int cmd_eval(const CliConfig& cfg, const std::string& fn,
             const std::string& ztext) {
    const Complex z = lemni::parse_complex(ztext);
    const Complex v = eval_fn(fn, z);
    if (cfg.format == "json") {
        const json out{{"fn", fn},
                       {"z", {z.real(), z.imag()}},
                       {"value", {v.real(), v.imag()}}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const int d = cfg.digits;
    std::cout << "re_z,im_z,re_f,im_f\n"
              << lemni::format_double(z.real(), d) << ','
              << lemni::format_double(z.imag(), d) << ','
              << lemni::format_double(v.real(), d) << ','
              << lemni::format_double(v.imag(), d) << "\n";
    return 0;
}

int cmd_grid(const CliConfig& cfg, const std::string& fn,
             const std::string& center_text, double half_width, int points,
             double exclusion) {
    const Complex center = lemni::parse_complex(center_text);
    if (points < 2)
        throw lemni::usage_error("grid: --points must be >= 2");
    if (!(half_width > 0.0))
        throw lemni::usage_error("grid: --half-width must be positive");
    if (exclusion < 0.0)
        throw lemni::usage_error("grid: --exclusion must be >= 0");

    const double step = 2.0 * half_width / (points - 1);
    json rows = json::array();
    if (cfg.format == "csv")
        std::cout << "re_z,im_z,re_f,im_f,excluded\n";
    for (int j = 0; j < points; ++j) {
        for (int i = 0; i < points; ++i) {
            const Complex z = center + Complex(-half_width + i * step,
                                               -half_width + j * step);
            bool excluded = singular_distance(fn, z) < exclusion;
            Complex v;
            if (!excluded) {
                try {
                    v = eval_fn(fn, z);
                } catch (const std::domain_error&) {
                    excluded = true;
                }
            }
            if (cfg.format == "json") {
                if (excluded)
                    rows.push_back({z.real(), z.imag(), nullptr, nullptr});
                else
                    rows.push_back({z.real(), z.imag(), v.real(), v.imag()});
                continue;
            }
            const int d = cfg.digits;
            std::cout << lemni::format_double(z.real(), d) << ','
                      << lemni::format_double(z.imag(), d) << ',';
            if (excluded)
                std::cout << ",,1\n";
            else
                std::cout << lemni::format_double(v.real(), d) << ','
                          << lemni::format_double(v.imag(), d) << ",0\n";
        }
    }
    if (cfg.format == "json")
        std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_coeffs(const CliConfig& cfg, int n) {
    if (n < 1)
        throw lemni::usage_error("coeffs: --n must be >= 1");
    const lemni::TaylorPair tp(n);
    if (cfg.format == "json") {
        json rows = json::array();
        for (int k = 0; k <= tp.order(); ++k)
            rows.push_back({k, tp.a(k), tp.b(k)});
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    lemni::write_coefficients_csv(std::cout, tp);
    return 0;
}

int cmd_poles(const CliConfig& cfg, const std::vector<long long>& m_range,
              const std::vector<long long>& n_range) {
    const auto points = lemni::pole_points(ctx(), m_range[0], m_range[1],
                                           n_range[0], n_range[1]);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& p : points)
            rows.push_back({p.m, p.n, p.z.real(), p.z.imag()});
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    std::cout << "m,n,re,im\n";
    for (const auto& p : points)
        std::cout << p.m << ',' << p.n << ','
                  << lemni::format_double(p.z.real(), cfg.digits) << ','
                  << lemni::format_double(p.z.imag(), cfg.digits) << "\n";
    return 0;
}

int cmd_verify(const CliConfig& cfg, const std::vector<std::string>& suites,
               const std::vector<std::string>& tol_overrides,
               const std::string& profile) {
    const auto& all = lemni::suite_names();
    std::vector<std::string> selected;
    for (const std::string& s : suites) {
        if (s == "all") {
            selected.insert(selected.end(), all.begin(), all.end());
            continue;
        }
        if (std::find(all.begin(), all.end(), s) == all.end()) {
            std::string msg = "unknown suite '" + s + "'; valid suites: all";
            for (const std::string& name : all)
                msg += " " + name;
            throw lemni::usage_error(msg);
        }
        selected.push_back(s);
    }

    std::map<std::string, double> overrides;
    for (const std::string& ov : tol_overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw lemni::usage_error("bad --tol override '" + ov +
                                     "' (expected suite=value)");
        const std::string name = ov.substr(0, eq);
        if (std::find(all.begin(), all.end(), name) == all.end())
            throw lemni::usage_error("bad --tol override: unknown suite '" +
                                     name + "'");
        try {
            overrides[name] = std::stod(ov.substr(eq + 1));
        } catch (const std::exception&) {
            throw lemni::usage_error("bad --tol override value in '" + ov + "'");
        }
    }

    const double scale = profile == "strict" ? 0.1 : 1.0;
    std::vector<lemni::IdentityReport> reports;
    for (const std::string& name : selected) {
        double tol = lemni::default_tolerance(name) * scale;
        if (const auto it = overrides.find(name); it != overrides.end())
            tol = it->second;
        reports.push_back(lemni::run_suite(name, lemni::default_grid(name),
                                           {tol, tol}));
    }

    if (cfg.format == "json") {
        std::cout << lemni::reports_to_json(reports) << "\n";
    } else {
        std::cout << "suite,samples_evaluated,samples_excluded,max_residual,"
                     "argmax_re,argmax_im,tolerance,passed\n";
        for (const auto& r : reports)
            std::cout << r.suite << ',' << r.samples_evaluated << ','
                      << r.samples_excluded << ','
                      << lemni::format_double(r.max_residual, cfg.digits) << ','
                      << lemni::format_double(r.argmax_point.real(), cfg.digits)
                      << ','
                      << lemni::format_double(r.argmax_point.imag(), cfg.digits)
                      << ','
                      << lemni::format_double(r.tolerance, cfg.digits) << ','
                      << (r.passed ? 1 : 0) << "\n";
    }
    for (const auto& r : reports)
        if (!r.passed)
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lemniscatic elliptic function toolkit"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--digits", cfg.digits, "significant digits (csv output)")
        ->check(CLI::Range(1, 17));

    auto* constants =
        app.add_subcommand("constants", "print the characteristic constants");

    std::string eval_fn_name, eval_z;
    auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
    eval->add_option("--fn", eval_fn_name, "one of s,c,S,C,P,sl,sd,wp,wp_prime")
        ->required()
        ->check(CLI::IsMember(
            {"s", "c", "S", "C", "P", "sl", "sd", "wp", "wp_prime"}));
    eval->add_option("--z", eval_z, "complex point, e.g. 0.3+0.2i")->required();

    std::string grid_fn, grid_center = "0";
    double grid_hw = 0.6, grid_excl = 0.0;
    int grid_points = 41;
    auto* grid = app.add_subcommand("grid", "evaluate a function over a grid");
    grid->add_option("--fn", grid_fn, "function name")
        ->required()
        ->check(CLI::IsMember(
            {"s", "c", "S", "C", "P", "sl", "sd", "wp", "wp_prime"}));
    grid->add_option("--center", grid_center, "grid center (complex)");
    grid->add_option("--half-width", grid_hw, "grid half width");
    grid->add_option("--points", grid_points, "points per side");
    grid->add_option("--exclusion", grid_excl, "singularity exclusion radius");

    int coeffs_n = 0;
    auto* coeffs = app.add_subcommand("coeffs", "dump Taylor coefficients");
    coeffs->add_option("--n", coeffs_n, "highest order")->required();

    std::vector<long long> poles_m, poles_n;
    auto* poles = app.add_subcommand("poles", "enumerate the pole set");
    poles->add_option("--m", poles_m, "m range (two values)")
        ->required()
        ->expected(2);
    poles->add_option("--n", poles_n, "n range (two values)")
        ->required()
        ->expected(2);

    std::vector<std::string> verify_suites, verify_tols;
    std::string verify_profile = "default";
    auto* verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("--suite", verify_suites, "suite name(s) or 'all'")
        ->required();
    verify->add_option("--tol", verify_tols, "per-suite override suite=value");
    verify->add_option("--profile", verify_profile, "tolerance profile")
        ->check(CLI::IsMember({"default", "strict"}));

    // Let --format / --digits appear on either side of the subcommand.
    for (CLI::App* sub : {constants, eval, grid, coeffs, poles, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*constants)
            return cmd_constants(cfg);
        if (*eval)
            return cmd_eval(cfg, eval_fn_name, eval_z);
        if (*grid)
            return cmd_grid(cfg, grid_fn, grid_center, grid_hw, grid_points,
                            grid_excl);
        if (*coeffs)
            return cmd_coeffs(cfg, coeffs_n);
        if (*poles)
            return cmd_poles(cfg, poles_m, poles_n);
        if (*verify)
            return cmd_verify(cfg, verify_suites, verify_tols, verify_profile);
    } catch (const lemni::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
