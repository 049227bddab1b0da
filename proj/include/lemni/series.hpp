#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lemni/numerics.hpp"

namespace lemni {

/// Taylor coefficients about 0 of the solution pair of
///
///     s' = c^3,   c' = -s^3,   s(0) = 0, c(0) = 1.
///
/// Cubing the i-rotation symmetry of the system forces a(n) = 0 unless
/// n = 4j+1 and b(n) = 0 unless n = 4j, so only those lanes are stored:
/// A[j] = a(4j+1), B[j] = b(4j). Matching powers of z in the system gives
///
///     B[j] = -[w^(j-1)] (A*A*A) / (4j),
///     A[j] =  [w^j]     (B*B*B) / (4j+1),
///
/// where * is the Cauchy product over lane index w.
class TaylorPair {
public:
    static constexpr int kDefaultOrder = 128;

    explicit TaylorPair(int order = kDefaultOrder);

    int order() const noexcept { return order_; }

    /// Dense coefficient of z^n in s (0 outside the n = 4j+1 lane).
    double a(int n) const;
    /// Dense coefficient of z^n in c (0 outside the n = 4j lane).
    double b(int n) const;

    std::span<const double> s_lanes() const noexcept { return s_lane_; }
    std::span<const double> c_lanes() const noexcept { return c_lane_; }

private:
    int order_;
    std::vector<double> s_lane_;
    std::vector<double> c_lane_;
};

TaylorPair taylor_coefficients(int order);

/// Truncated series value of s at z. Guarded: |z| must stay below
/// 0.95 * omega/sqrt(2), and the stored order must put the estimated
/// truncation tail below 1e-13 at |z| (raise the order if it throws).
Complex eval_s(const TaylorPair& tp, Complex z);
Complex eval_c(const TaylorPair& tp, Complex z);

struct RadiusConstants {
    double picard_radius;   // 4/27, from the contraction-mapping bound
    double scalar_radius;   // (4/27)^(1/4), after undoing the scaling
    double true_radius;     // omega/sqrt(2), distance to the branch points
};

RadiusConstants radius_constants();

/// CSV dump "n,a_n,b_n" for n = 0..order, shortest round-trip decimals.
void write_coefficients_csv(std::ostream& out, const TaylorPair& tp);

/// Piecewise-linear path for analytic continuation. Must start at 0.
struct PathPolyline {
    std::vector<Complex> vertices;
    double max_step = 1e-3;
};

struct PathState {
    Complex z, s, c;
};

/// Classical RK4 continuation of (s, c) along the path, step <= max_step.
/// Rejects paths that come within 10*max_step of a branch point
/// (1 +/- i) omega/2 + lattice. Returns the state at each vertex.
std::vector<PathState> rk_continue(const PathPolyline& path);

} // namespace lemni
