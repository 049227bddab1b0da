#include "lemni/series.hpp"

#include <cmath>
#include <ostream>

#include "lemni/format.hpp"
#include "lemni/weierstrass.hpp"

namespace lemni {

namespace {

// [w^m] (x * x * x) over the lane index, direct triple sum. Quadratic per
// coefficient; the lane counts in play make the total cost irrelevant.
double cube_coeff(std::span<const double> x, int m) {
    double total = 0.0;
    for (int p = 0; p <= m; ++p) {
        double inner = 0.0;
        for (int q = 0; q <= m - p; ++q)
            inner += x[q] * x[m - p - q];
        total += x[p] * inner;
    }
    return total;
}

} // namespace

TaylorPair::TaylorPair(int order) : order_(order) {
    if (order < 1)
        throw domain_bound_error("TaylorPair: order must be >= 1");
    const int s_count = (order - 1) / 4 + 1;  // lanes with 4j+1 <= order
    const int c_count = order / 4 + 1;        // lanes with 4j   <= order
    s_lane_.assign(s_count, 0.0);
    c_lane_.assign(c_count, 0.0);
    s_lane_[0] = 1.0;
    c_lane_[0] = 1.0;
    const int top = std::max(s_count, c_count);
    for (int j = 1; j < top; ++j) {
        if (j < c_count)
            c_lane_[j] = -cube_coeff(s_lane_, j - 1) / (4.0 * j);
        if (j < s_count)
            s_lane_[j] = cube_coeff(c_lane_, j) / (4.0 * j + 1.0);
    }
}

double TaylorPair::a(int n) const {
    if (n < 0 || n > order_)
        throw domain_bound_error("TaylorPair::a: index out of range");
    if (n % 4 != 1)
        return 0.0;
    return s_lane_[n / 4];
}

double TaylorPair::b(int n) const {
    if (n < 0 || n > order_)
        throw domain_bound_error("TaylorPair::b: index out of range");
    if (n % 4 != 0)
        return 0.0;
    return c_lane_[n / 4];
}

TaylorPair taylor_coefficients(int order) { return TaylorPair(order); }

RadiusConstants radius_constants() {
    return {4.0 / 27.0, std::pow(4.0 / 27.0, 0.25),
            lemniscate_omega() / std::sqrt(2.0)};
}

namespace {

// Guards shared by eval_s/eval_c: the hard radius, then the estimated
// truncation tail (last retained lane term times rho^4/(1-rho^4)).
void check_series_domain(const char* fn, std::span<const double> lane,
                         int offset, double r) {
    static const double radius = lemniscate_omega() / std::sqrt(2.0);
    const double guard = 0.95 * radius;
    if (!(r <= guard))
        throw domain_bound_error(
            std::string(fn) + ": |z| = " + format_double(r) +
            " exceeds the guarded radius 0.95*omega/sqrt(2) = " +
            format_double(guard));
    if (r == 0.0)
        return;
    const int top_exp = 4 * (static_cast<int>(lane.size()) - 1) + offset;
    const double last = std::abs(lane.back()) * std::pow(r, top_exp);
    const double rho4 = std::pow(r / radius, 4.0);
    const double tail = last * rho4 / (1.0 - rho4);
    if (!(tail < 1e-13))
        throw domain_bound_error(
            std::string(fn) + ": estimated truncation tail " +
            format_double(tail) + " at |z| = " + format_double(r) +
            " exceeds 1e-13; increase the TaylorPair order");
}

} // namespace

Complex eval_s(const TaylorPair& tp, Complex z) {
    check_series_domain("eval_s", tp.s_lanes(), 1, std::abs(z));
    return eval_series(tp.s_lanes(), 4, 1, z);
}

Complex eval_c(const TaylorPair& tp, Complex z) {
    check_series_domain("eval_c", tp.c_lanes(), 0, std::abs(z));
    return eval_series(tp.c_lanes(), 4, 0, z);
}

void write_coefficients_csv(std::ostream& out, const TaylorPair& tp) {
    out << "n,a_n,b_n\n";
    for (int n = 0; n <= tp.order(); ++n)
        out << n << ',' << format_double(tp.a(n)) << ','
            << format_double(tp.b(n)) << '\n';
}

namespace {

Complex pow3(Complex x) { return x * x * x; }

// One RK4 step of s' = c^3, c' = -s^3 with complex increment h.
void rk4_step(Complex& s, Complex& c, Complex h) {
    const Complex a1 = pow3(c) * h;
    const Complex b1 = -pow3(s) * h;
    const Complex a2 = pow3(c + 0.5 * b1) * h;
    const Complex b2 = -pow3(s + 0.5 * a1) * h;
    const Complex a3 = pow3(c + 0.5 * b2) * h;
    const Complex b3 = -pow3(s + 0.5 * a2) * h;
    const Complex a4 = pow3(c + b3) * h;
    const Complex b4 = -pow3(s + a3) * h;
    s += (a1 + 2.0 * a2 + 2.0 * a3 + a4) / 6.0;
    c += (b1 + 2.0 * b2 + 2.0 * b3 + b4) / 6.0;
}

} // namespace

std::vector<PathState> rk_continue(const PathPolyline& path) {
    if (path.vertices.empty())
        throw domain_bound_error("rk_continue: empty path");
    if (path.vertices.front() != Complex(0.0))
        throw domain_bound_error("rk_continue: path must start at 0");
    if (!(path.max_step > 0.0))
        throw domain_bound_error("rk_continue: max_step must be positive");

    const double omega = lemniscate_omega();
    const double clearance = 10.0 * path.max_step;
    auto guard = [&](Complex z) {
        const Complex bp = nearest_branch_point(omega, z);
        if (std::abs(z - bp) < clearance)
            throw pole_proximity_error(
                "rk_continue: path passes within 10*max_step of the branch "
                "point " + format_complex(bp), bp);
    };

    Complex s = 0.0, c = 1.0;
    std::vector<PathState> out;
    guard(path.vertices.front());
    out.push_back({path.vertices.front(), s, c});
    for (std::size_t v = 1; v < path.vertices.size(); ++v) {
        const Complex za = path.vertices[v - 1];
        const Complex zb = path.vertices[v];
        if (za == zb)
            throw domain_bound_error("rk_continue: repeated vertex");
        const double len = std::abs(zb - za);
        const long n = static_cast<long>(std::ceil(len / path.max_step));
        const Complex h = (zb - za) / static_cast<double>(n);
        for (long k = 0; k < n; ++k) {
            guard(za + static_cast<double>(k) * h);
            rk4_step(s, c, h);
        }
        guard(zb);
        out.push_back({zb, s, c});
    }
    return out;
}

} // namespace lemni
