#include "lemni/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lemni/format.hpp"
#include "lemni/series.hpp"

namespace lemni {

namespace {

constexpr double kLatticeSwitch = 0.05;
constexpr double kPoleGuard = 1e-8;

// The caller's argument is scale * z_wp; its poles sit at scale * PoleSet.
void check_pole(const WeierstrassContext& ctx, const char* fn, Complex z_wp,
                double scale) {
    const Complex p = nearest_branch_point(ctx.omega(), z_wp);
    if (std::abs(z_wp - p) * scale < kPoleGuard) {
        const Complex pole = scale * p;
        throw pole_proximity_error(
            std::string(fn) + ": argument within 1e-8 of the pole " +
            format_complex(pole), pole);
    }
}

Complex S_kernel(const WeierstrassContext& ctx, Complex z) {
    const Complex z0 = reduce(ctx, z).z0;
    if (std::abs(z0) < kLatticeSwitch) {
        const Complex g = eval_series(ctx.g_coefficients(), 2, 0, z0);
        const Complex z2 = z0 * z0;
        return 4.0 * z2 * g / (4.0 * g * g + z2 * z2);
    }
    const Complex p = eval_series(ctx.g_coefficients(), 2, -2, z0);
    return p / (p * p + 0.25);
}

Complex C_kernel(const WeierstrassContext& ctx, Complex z) {
    const Complex z0 = reduce(ctx, z).z0;
    if (std::abs(z0) < kLatticeSwitch) {
        const Complex g = eval_series(ctx.g_coefficients(), 2, 0, z0);
        const Complex z4 = (z0 * z0) * (z0 * z0);
        return (4.0 * g * g - z4) / (4.0 * g * g + z4);
    }
    const Complex p = eval_series(ctx.g_coefficients(), 2, -2, z0);
    return (p * p - 0.25) / (p * p + 0.25);
}

Complex P_kernel(const WeierstrassContext& ctx, Complex z) {
    const Complex z0 = reduce(ctx, z).z0;
    if (std::abs(z0) < kLatticeSwitch) {
        const Complex g = eval_series(ctx.g_coefficients(), 2, 0, z0);
        const Complex h = eval_series(ctx.h_coefficients(), 2, 0, z0);
        const Complex z2 = z0 * z0;
        return 4.0 * z0 * h / (4.0 * g * g + z2 * z2);
    }
    const Complex p = eval_series(ctx.g_coefficients(), 2, -2, z0);
    const Complex d = -2.0 * eval_series(ctx.h_coefficients(), 2, -3, z0);
    return -0.5 * d / (p * p + 0.25);
}

} // namespace

Complex S_eval(const WeierstrassContext& ctx, Complex z) {
    check_pole(ctx, "S_eval", z, 1.0);
    return S_kernel(ctx, z);
}

Complex C_eval(const WeierstrassContext& ctx, Complex z) {
    check_pole(ctx, "C_eval", z, 1.0);
    return C_kernel(ctx, z);
}

Complex P_eval(const WeierstrassContext& ctx, Complex z) {
    check_pole(ctx, "P_eval", z, 1.0);
    return P_kernel(ctx, z);
}

Complex sl_eval(const WeierstrassContext& ctx, Complex u) {
    static const double rt2 = std::sqrt(2.0);
    const Complex z = u / rt2;
    check_pole(ctx, "sl_eval", z, rt2);
    return rt2 * P_kernel(ctx, z);
}

Complex sd_eval(const WeierstrassContext& ctx, Complex u) {
    const Complex z = 0.5 * u;
    check_pole(ctx, "sd_eval", z, 2.0);
    return 2.0 * P_kernel(ctx, z);
}

namespace {

struct SnCnDn {
    double sn, cn, dn;
};

// Real-argument sn, cn, dn at the fixed modulus m = 1/2 by the descending
// AGM phase recursion: a_0 = 1, b_0 = c_0 = sqrt(1/2),
// phi_N = 2^N a_N x, then phi_{j-1} = (phi_j + asin((c_j/a_j) sin phi_j))/2.
// sn = sin phi_0, cn = cos phi_0, and dn = sqrt(1 - m sn^2) (positive on
// the real axis, where dn ranges in [sqrt(1/2), 1]).
SnCnDn sncndn_half(double x) {
    constexpr int kMax = 12;
    double a[kMax], c[kMax];
    a[0] = 1.0;
    c[0] = std::sqrt(0.5);
    double b = std::sqrt(0.5);
    int n = 0;
    while (c[n] > std::numeric_limits<double>::epsilon() * a[n] && n + 1 < kMax) {
        const double an = 0.5 * (a[n] + b);
        const double cn = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
        a[n] = an;
        c[n] = cn;
    }
    double phi = std::ldexp(a[n] * x, n);
    for (int j = n; j >= 1; --j) {
        const double t = std::clamp(c[j] / a[j] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (std::asin(t) + phi);
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(1.0 - 0.5 * sn * sn);
    return {sn, cn, dn};
}

} // namespace

Complex jacobi_sd_agm(Complex u) {
    // Complex argument via the addition-type composition with the
    // complementary modulus, which here equals the modulus itself.
    const auto [s, c, d] = sncndn_half(u.real());
    const auto [s1, c1, d1] = sncndn_half(u.imag());
    const double delta = c1 * c1 + 0.5 * s * s * s1 * s1;
    if (delta < 1e-12)
        throw degenerate_formula_error(
            "jacobi_sd_agm: argument too close to a pole of sn");
    const Complex sn(s * d1 / delta, c * d * s1 * c1 / delta);
    const Complex dn(d * c1 * d1 / delta, -0.5 * s * c * s1 / delta);
    if (std::abs(dn) < 1e-10)
        throw degenerate_formula_error(
            "jacobi_sd_agm: dn vanishes (argument near a pole of sd)");
    return sn / dn;
}

std::vector<PolePoint> pole_points(const WeierstrassContext& ctx,
                                   long long m_lo, long long m_hi,
                                   long long n_lo, long long n_hi) {
    if (m_lo > m_hi || n_lo > n_hi)
        throw usage_error("pole_points: empty index range");
    static constexpr int sx[4] = {+1, +1, -1, -1};
    static constexpr int sy[4] = {+1, -1, +1, -1};
    const double w = ctx.omega();
    std::vector<PolePoint> out;
    out.reserve(4 * static_cast<std::size_t>(m_hi - m_lo + 1) *
                static_cast<std::size_t>(n_hi - n_lo + 1));
    for (long long m = m_lo; m <= m_hi; ++m)
        for (long long n = n_lo; n <= n_hi; ++n)
            for (int k = 0; k < 4; ++k)
                out.push_back({m, n,
                               Complex(0.5 * sx[k] * w + 2.0 * w * m,
                                       0.5 * sy[k] * w + 2.0 * w * n)});
    return out;
}

std::vector<Complex> pole_set(const WeierstrassContext& ctx,
                              long long m_lo, long long m_hi,
                              long long n_lo, long long n_hi) {
    std::vector<Complex> out;
    for (const PolePoint& p : pole_points(ctx, m_lo, m_hi, n_lo, n_hi))
        out.push_back(p.z);
    return out;
}

Complex nearest_pole(const WeierstrassContext& ctx, Complex z) {
    return nearest_branch_point(ctx.omega(), z);
}

namespace {

Complex nearest_root(Complex square, Complex anchor) {
    const Complex r = std::sqrt(square);
    return std::abs(r - anchor) <= std::abs(r + anchor) ? r : -r;
}

Complex branch_continue(const WeierstrassContext& ctx, Complex z,
                        bool root_of_S) {
    const char* fn = root_of_S ? "s_branch" : "c_branch";
    const double limit = 0.98 * ctx.omega() / std::sqrt(2.0);
    if (!(std::abs(z) < limit))
        throw domain_bound_error(
            std::string(fn) + ": |z| must stay below 0.98*omega/sqrt(2) = " +
            format_double(limit));
    auto F = root_of_S ? S_eval : C_eval;
    const Complex anchor0 = root_of_S ? Complex(0.0) : Complex(1.0);
    if (z == Complex(0.0))
        return anchor0;
    if (std::abs(z) <= 0.01)
        return nearest_root(F(ctx, z), root_of_S ? z : Complex(1.0));

    Complex cur = 0.01 * (z / std::abs(z));
    Complex val = nearest_root(F(ctx, cur), root_of_S ? cur : Complex(1.0));
    double cap = 0.02;
    while (cur != z) {
        const Complex remaining = z - cur;
        const double rem = std::abs(remaining);
        const Complex next = rem <= cap ? z : cur + remaining * (cap / rem);
        const Complex r = std::sqrt(F(ctx, next));
        const Complex q = std::abs(r - val) <= std::abs(r + val) ? r : -r;
        const double movement = std::abs(q - val);
        if (2.0 * std::abs(r) < 4.0 * movement) {
            cap *= 0.5;
            if (cap < 1e-6)
                throw pole_proximity_error(
                    std::string(fn) +
                    ": branch tracking stalled near the branch point " +
                    format_complex(nearest_pole(ctx, next)),
                    nearest_pole(ctx, next));
            continue;
        }
        val = q;
        cur = next;
        cap = std::min(2.0 * cap, 0.02);
    }
    return val;
}

} // namespace

Complex s_branch(const WeierstrassContext& ctx, Complex z) {
    return branch_continue(ctx, z, true);
}

Complex c_branch(const WeierstrassContext& ctx, Complex z) {
    return branch_continue(ctx, z, false);
}

namespace {

std::vector<double> dense_a(const TaylorPair& tp) {
    std::vector<double> a(static_cast<std::size_t>(tp.order()) + 1, 0.0);
    const auto lanes = tp.s_lanes();
    for (std::size_t j = 0; j < lanes.size(); ++j)
        a[4 * j + 1] = lanes[j];
    return a;
}

std::vector<double> dense_b(const TaylorPair& tp) {
    std::vector<double> b(static_cast<std::size_t>(tp.order()) + 1, 0.0);
    const auto lanes = tp.c_lanes();
    for (std::size_t j = 0; j < lanes.size(); ++j)
        b[4 * j] = lanes[j];
    return b;
}

std::vector<double> conv(const std::vector<double>& x,
                         const std::vector<double>& y, int order) {
    std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
    for (std::size_t i = 0; i < x.size() && i <= static_cast<std::size_t>(order); ++i) {
        if (x[i] == 0.0)
            continue;
        const std::size_t jmax =
            std::min(y.size() - 1, static_cast<std::size_t>(order) - i);
        for (std::size_t j = 0; j <= jmax; ++j)
            out[i + j] += x[i] * y[j];
    }
    return out;
}

} // namespace

SquareSeries square_series(int order) {
    const TaylorPair tp(order);
    const auto a = dense_a(tp);
    const auto b = dense_b(tp);
    return {order, conv(a, a, order), conv(b, b, order)};
}

double second_order_coeff_residual(int through_order) {
    const SquareSeries sq = square_series(through_order + 2);
    const int n_top = through_order;
    const auto S2 = conv(sq.S, sq.S, n_top);
    const auto C2 = conv(sq.C, sq.C, n_top);
    const auto S3 = conv(S2, sq.S, n_top);
    const auto C3 = conv(C2, sq.C, n_top);
    const auto S2C = conv(S2, sq.C, n_top);
    const auto C2S = conv(C2, sq.S, n_top);
    double worst = 0.0;
    for (int n = 0; n <= n_top; ++n) {
        const double d2 = (n + 2.0) * (n + 1.0);
        worst = std::max(worst,
                         std::abs(d2 * sq.S[n + 2] - (2.0 * C3[n] - 6.0 * S2C[n])));
        worst = std::max(worst,
                         std::abs(d2 * sq.C[n + 2] - (2.0 * S3[n] - 6.0 * C2S[n])));
    }
    return worst;
}

double fourth_order_coeff_residual(int through_order) {
    const SquareSeries sq = square_series(through_order + 4);
    const int n_top = through_order;
    double worst = 0.0;
    for (const std::vector<double>* fp : {&sq.S, &sq.C}) {
        const std::vector<double>& f = *fp;
        const auto f2 = conv(f, f, n_top);
        const auto f3 = conv(f2, f, n_top);
        const auto f4 = conv(f2, f2, n_top);
        const auto f5 = conv(f4, f, n_top);
        for (int n = 0; n <= n_top; ++n) {
            const double d4 =
                (n + 4.0) * (n + 3.0) * (n + 2.0) * (n + 1.0) * f[n + 4];
            const double rhs =
                -12.0 * (32.0 * f5[n] - 40.0 * f3[n] + 9.0 * f[n]);
            worst = std::max(worst, std::abs(d4 - rhs));
        }
    }
    return worst;
}

} // namespace lemni
