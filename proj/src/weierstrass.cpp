#include "lemni/weierstrass.hpp"

#include <cmath>
#include <numbers>

#include "lemni/format.hpp"

namespace lemni {

double lemniscate_omega() {
    static const double value = [] {
        auto f = [](double t) { return 1.0 / std::sqrt(1.0 + t * t * t * t); };
        const double quad = 2.0 * integrate(f, 0.0, 1.0, {1e-14, 1e-14});
        const double closed =
            std::numbers::pi / (std::sqrt(2.0) * agm(1.0, std::sqrt(2.0)));
        if (std::abs(quad - closed) > 1e-10)
            throw consistency_error(
                "lemniscate_omega: quadrature and AGM closed form disagree by " +
                format_double(std::abs(quad - closed)));
        return quad;
    }();
    return value;
}

namespace {

// Round to nearest integer, halves toward zero, as a double.
double round_half_toward_zero(double q) {
    double t = std::trunc(q);
    const double r = q - t;
    if (r > 0.5)
        t += 1.0;
    else if (r < -0.5)
        t -= 1.0;
    return t;
}

} // namespace

Complex nearest_branch_point(double omega, Complex z) {
    const Complex base(0.5 * omega, 0.5 * omega);
    const Complex u = z - base;
    const double m = round_half_toward_zero(u.real() / omega);
    const double n = round_half_toward_zero(u.imag() / omega);
    return base + Complex(m * omega, n * omega);
}

WeierstrassContext::WeierstrassContext(int laurent_order)
    : order_(laurent_order), omega_(lemniscate_omega()) {
    if (laurent_order < 8)
        throw domain_bound_error("WeierstrassContext: laurent_order must be >= 8");
    c_.assign(order_ + 1, 0.0);
    c_[2] = 1.0 / 20.0;  // g2/20 with g2 = 1
    c_[3] = 0.0;         // g3/28 with g3 = 0
    for (int k = 4; k <= order_; ++k) {
        double sum = 0.0;
        for (int m = 2; m <= k - 2; ++m)
            sum += c_[m] * c_[k - m];
        c_[k] = 3.0 * sum / ((2.0 * k + 1.0) * (k - 3.0));
    }
    g_.assign(order_ + 1, 0.0);
    h_.assign(order_ + 1, 0.0);
    g_[0] = 1.0;
    h_[0] = 1.0;
    for (int k = 2; k <= order_; ++k) {
        g_[k] = c_[k];
        h_[k] = -(k - 1.0) * c_[k];
    }
}

LatticeReduction reduce(const WeierstrassContext& ctx, Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_bound_error("reduce: argument must be finite");
    const double period = 2.0 * ctx.omega();
    const double m = round_half_toward_zero(z.real() / period);
    const double n = round_half_toward_zero(z.imag() / period);
    const Complex z0(z.real() - m * period, z.imag() - n * period);
    return {z0, static_cast<long long>(m), static_cast<long long>(n)};
}

Complex wp(const WeierstrassContext& ctx, Complex z) {
    const LatticeReduction red = reduce(ctx, z);
    if (std::abs(red.z0) < 1e-8)
        throw pole_proximity_error(
            "wp: z within 1e-8 of the lattice point " +
            format_complex(z - red.z0), z - red.z0);
    return eval_series(ctx.g_coefficients(), 2, -2, red.z0);
}

Complex wp_prime(const WeierstrassContext& ctx, Complex z) {
    const LatticeReduction red = reduce(ctx, z);
    if (std::abs(red.z0) < 1e-8)
        throw pole_proximity_error(
            "wp_prime: z within 1e-8 of the lattice point " +
            format_complex(z - red.z0), z - red.z0);
    return -2.0 * eval_series(ctx.h_coefficients(), 2, -3, red.z0);
}

Complex wp_add(const WeierstrassContext& ctx, Complex z, Complex w) {
    const Complex pz = wp(ctx, z);
    const Complex pw = wp(ctx, w);
    if (std::abs(pz - pw) <= 1e-10)
        throw degenerate_formula_error(
            "wp_add: wp(z) and wp(w) coincide; the chord slope is undefined");
    const Complex slope = (wp_prime(ctx, z) - wp_prime(ctx, w)) / (pz - pw);
    return 0.25 * slope * slope - pz - pw;
}

Complex wp_duplicate(const WeierstrassContext& ctx, Complex z) {
    const Complex p = wp(ctx, z);
    const Complex d = wp_prime(ctx, z);
    if (std::abs(d) < 1e-8)
        throw degenerate_formula_error(
            "wp_duplicate: wp'(z) vanishes (z is near a half-period)");
    const Complex q = p * p + 0.25;
    return q * q / (d * d);
}

Complex wp_translate_half(const WeierstrassContext& ctx, Complex z) {
    const Complex p = wp(ctx, z);
    if (std::abs(p - 0.5) <= 1e-10) {
        const LatticeReduction red = reduce(ctx, z - ctx.omega());
        throw pole_proximity_error(
            "wp_translate_half: wp(z) = 1/2, so z - omega sits on the lattice",
            z - red.z0);
    }
    return 0.5 * (p + 0.5) / (p - 0.5);
}

} // namespace lemni
