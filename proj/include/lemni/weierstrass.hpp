#pragma once

#include <span>
#include <vector>

#include "lemni/numerics.hpp"

namespace lemni {

/// Real half-period omega of the lattice with invariants g2 = 1, g3 = 0:
///
///     omega = 2 * Integral_0^1 (1 + t^4)^(-1/2) dt
///           = pi / (sqrt(2) * agm(1, sqrt(2))).
///
/// Computed once by quadrature, cross-checked against the AGM closed form
/// (throws consistency_error if they disagree beyond 1e-10), then cached.
double lemniscate_omega();

/// Nearest point of the midpoint lattice (1 +/- i) omega/2 + omega Z[i]:
/// the common pole set of the elliptic extensions and the branch points
/// of the continued square roots.
Complex nearest_branch_point(double omega, Complex z);

/// Laurent data for wp with g2 = 1, g3 = 0:
///
///     wp(z) = z^-2 + sum_{k>=2} c_k z^(2k-2),
///     c_2 = 1/20,  c_3 = 0,
///     c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}   (k >= 4).
///
/// Also carries the entire-part arrays g, h of the pole-free forms
/// wp(z) = g(z)/z^2 and wp'(z) = -2 h(z)/z^3 with
/// g = 1 + sum c_k z^(2k), h = 1 - sum (k-1) c_k z^(2k).
class WeierstrassContext {
public:
    static constexpr int kDefaultLaurentOrder = 60;

    explicit WeierstrassContext(int laurent_order = kDefaultLaurentOrder);

    double omega() const noexcept { return omega_; }
    double g2() const noexcept { return 1.0; }
    double g3() const noexcept { return 0.0; }
    int laurent_order() const noexcept { return order_; }

    /// c_k for k = 0..laurent_order (c_0 = c_1 = 0).
    std::span<const double> laurent() const noexcept { return c_; }

    /// Coefficients of g over z^2 (also the wp series when shifted by z^-2).
    std::span<const double> g_coefficients() const noexcept { return g_; }
    /// Coefficients of h over z^2.
    std::span<const double> h_coefficients() const noexcept { return h_; }

private:
    int order_;
    double omega_;
    std::vector<double> c_;
    std::vector<double> g_;
    std::vector<double> h_;
};

/// z = z0 + 2 omega m + 2 i omega n with |Re z0|, |Im z0| <= omega.
/// Points on the boundary round toward zero.
struct LatticeReduction {
    Complex z0;
    long long m, n;
};

LatticeReduction reduce(const WeierstrassContext& ctx, Complex z);

/// wp(z) by lattice reduction and the truncated Laurent series.
/// Throws pole_proximity_error within 1e-8 of a lattice point.
Complex wp(const WeierstrassContext& ctx, Complex z);
Complex wp_prime(const WeierstrassContext& ctx, Complex z);

/// Addition formula value
///     wp(z+w) = ((wp'(z) - wp'(w)) / (2(wp(z) - wp(w))))^2 - wp(z) - wp(w).
/// Degenerate when wp(z) and wp(w) coincide (within 1e-10).
Complex wp_add(const WeierstrassContext& ctx, Complex z, Complex w);

/// Duplication value wp(2z) = (wp(z)^2 + 1/4)^2 / wp'(z)^2.
/// Degenerate when wp'(z) vanishes (z near a half-period).
Complex wp_duplicate(const WeierstrassContext& ctx, Complex z);

/// Half-period translation wp(z - omega) = (1/2)(wp(z) + 1/2)/(wp(z) - 1/2).
Complex wp_translate_half(const WeierstrassContext& ctx, Complex z);

} // namespace lemni
