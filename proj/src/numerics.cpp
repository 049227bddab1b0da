#include "lemni/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace lemni {

double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_bound_error("agm: arguments must be positive");
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 64; ++it) {
        if (std::abs(a - b) <= 4.0 * eps * std::max(a, b))
            return 0.5 * (a + b);
        double an = 0.5 * (a + b);
        double bn = std::sqrt(a * b);
        a = an;
        b = bn;
    }
    return 0.5 * (a + b);
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// xk[7] = 0; even indices are the Kronrod-added nodes.
constexpr std::array<double, 8> kXk = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr std::array<double, 8> kWk = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr std::array<double, 4> kWg = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
    double a, b;
    double integral;  // K15 value
    double err;       // |K15 - G7|
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const double fc = f(c);
    double kron = kWk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXk[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kWk[i] * fsum;
        if (i % 2 == 1)
            gauss += kWg[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 Tolerance tol) {
    if (!(a < b))
        throw domain_bound_error("integrate: requires a < b");
    if (!(tol.abs_tol > 0.0) && !(tol.rel_tol > 0.0))
        throw domain_bound_error("integrate: tolerance must be positive");

    constexpr std::size_t kMaxPanels = 2000;
    std::vector<Panel> panels;
    panels.push_back(gk15(f, a, b));

    for (;;) {
        double total = 0.0, err = 0.0;
        for (const Panel& p : panels) {
            total += p.integral;
            err += p.err;
        }
        const double goal = std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
        if (err <= goal)
            return total;
        if (panels.size() >= kMaxPanels)
            throw accuracy_error("integrate: panel budget exhausted", total, err);

        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err)
                worst = i;
        const Panel p = panels[worst];
        const double m = 0.5 * (p.a + p.b);
        if (!(p.a < m && m < p.b))
            throw accuracy_error("integrate: interval too small to bisect",
                                 p.integral, p.err);
        panels[worst] = gk15(f, p.a, m);
        panels.push_back(gk15(f, m, p.b));
    }
}

Complex pow_int(Complex z, int n) {
    if (n < 0)
        return 1.0 / pow_int(z, -n);
    Complex result = 1.0;
    Complex base = z;
    unsigned k = static_cast<unsigned>(n);
    while (k != 0) {
        if (k & 1u)
            result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

Complex eval_series(std::span<const double> coeffs, int stride, int offset,
                    Complex z) {
    if (coeffs.empty())
        return {};
    if (stride < 1)
        throw domain_bound_error("eval_series: stride must be >= 1");
    const Complex w = pow_int(z, stride);
    Complex acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;)
        acc = acc * w + coeffs[i];
    return acc * pow_int(z, offset);
}

} // namespace lemni
