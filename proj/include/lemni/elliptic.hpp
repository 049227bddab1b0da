#pragma once

#include <vector>

#include "lemni/weierstrass.hpp"

namespace lemni {

/// Closed-form elliptic extensions of the squares and the product:
///
///     S = s^2 = wp/(wp^2 + 1/4),
///     C = c^2 = (wp^2 - 1/4)/(wp^2 + 1/4),
///     P = s c = -wp'/(2 (wp^2 + 1/4)),
///
/// all with simple poles exactly at (1 +/- i) omega/2 modulo the periods
/// 2 omega, 2i omega. Within 0.05 of a lattice point the removable
/// singularity of the quotients is handled by the pole-free rearrangements
///
///     S = 4 z^2 g / (4 g^2 + z^4),
///     C = (4 g^2 - z^4) / (4 g^2 + z^4),
///     P = 4 z h / (4 g^2 + z^4),
///
/// with g, h the entire parts wp = g/z^2, wp' = -2h/z^3, so that
/// S(0) = 0, C(0) = 1, P(0) = 0 hold exactly.
Complex S_eval(const WeierstrassContext& ctx, Complex z);
Complex C_eval(const WeierstrassContext& ctx, Complex z);
Complex P_eval(const WeierstrassContext& ctx, Complex z);

/// Lemniscatic sine: sl(u) = sqrt(2) P(u/sqrt(2)). Odd, sl(u) ~ u.
Complex sl_eval(const WeierstrassContext& ctx, Complex u);

/// Glaisher quotient with self-complementary modulus:
/// sd(u) = -wp'(u/2)/(wp(u/2)^2 + 1/4) = 2 P(u/2). Odd, sd(u) ~ u,
/// and sd(u)^2 = 1/wp(u).
Complex sd_eval(const WeierstrassContext& ctx, Complex u);

/// Independent oracle for sd with modulus k^2 = 1/2: real-axis sn, cn, dn
/// by the descending AGM recursion, complex argument by the standard
/// composition formulas. Shares nothing with the wp machinery.
Complex jacobi_sd_agm(Complex u);

struct PolePoint {
    long long m, n;
    Complex z;
};

/// The poles (1 +/- i) omega/2 + 2 omega m + 2i omega n for m, n in the
/// inclusive ranges, four per (m, n), ordered by m, then n, then base
/// point (+,+), (+,-), (-,+), (-,-).
std::vector<PolePoint> pole_points(const WeierstrassContext& ctx,
                                   long long m_lo, long long m_hi,
                                   long long n_lo, long long n_hi);
std::vector<Complex> pole_set(const WeierstrassContext& ctx,
                              long long m_lo, long long m_hi,
                              long long n_lo, long long n_hi);

/// Nearest member of the pole set to z.
Complex nearest_pole(const WeierstrassContext& ctx, Complex z);

/// Square roots of S and C continued along the straight segment from
/// 0.01 z/|z| to z (steps <= 0.02, nearest-root selection, steps rejected
/// and halved when the candidate roots are closer than 4x the step-to-step
/// movement). The branch is fixed by s(w) ~ w and c(0) = 1. Requires
/// |z| < 0.98 omega/sqrt(2).
Complex s_branch(const WeierstrassContext& ctx, Complex z);
Complex c_branch(const WeierstrassContext& ctx, Complex z);

/// Dense Taylor coefficients of S = s^2 and C = c^2 through `order`.
struct SquareSeries {
    int order;
    std::vector<double> S, C;
};

SquareSeries square_series(int order);

/// Largest coefficient defect of S'' = 2C^3 - 6S^2C, C'' = 2S^3 - 6C^2S
/// through the given order (Cauchy products of the ivp coefficients).
double second_order_coeff_residual(int through_order);

/// Same for F'''' = -12 F (32 F^4 - 40 F^2 + 9), F in {S, C}.
double fourth_order_coeff_residual(int through_order);

} // namespace lemni
