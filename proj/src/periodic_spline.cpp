#include "vortex/periodic_spline.hpp"

#include <cmath>
#include <stdexcept>

#include "vortex/tridiagonal.hpp"

namespace vortex {

PeriodicCubicSpline::PeriodicCubicSpline(const std::vector<double>& u,
                                         const std::vector<double>& f, double period) {
    const int n = static_cast<int>(u.size());
    if (n < 3 || f.size() != u.size())
        throw std::invalid_argument("PeriodicCubicSpline: need >= 3 matching breakpoints");
    if (!(period > 0.0))
        throw std::invalid_argument("PeriodicCubicSpline: period must be positive");
    period_ = period;
    u_ = u;
    u_.push_back(u[0] + period);
    for (int j = 0; j < n; ++j)
        if (!(u_[j + 1] > u_[j]))
            throw std::invalid_argument("PeriodicCubicSpline: breakpoints not increasing");
    inv_mean_h_ = n / period;

    // Moment (second-derivative) continuity system, cyclic in j.
    std::vector<double> h(n);
    for (int j = 0; j < n; ++j)
        h[j] = u_[j + 1] - u_[j];
    auto fp = [&](int j) { return f[(j + 1) % n]; };
    std::vector<double> a(n), b(n), c(n), rhs(n);
    for (int j = 0; j < n; ++j) {
        const double hm = h[(j + n - 1) % n];
        a[j] = hm / 6.0;
        b[j] = (hm + h[j]) / 3.0;
        c[j] = h[j] / 6.0;
        const double fj = f[j];
        const double fnext = fp(j);
        const double fprev = f[(j + n - 1) % n];
        rhs[j] = (fnext - fj) / h[j] - (fj - fprev) / hm;
    }
    const double corner = h[n - 1] / 6.0;
    const std::vector<double> m = solve_cyclic_tridiagonal(a, b, c, corner, corner, rhs);

    c0_.resize(n);
    c1_.resize(n);
    c2_.resize(n);
    c3_.resize(n);
    for (int j = 0; j < n; ++j) {
        const double mj = m[j];
        const double mn = m[(j + 1) % n];
        c0_[j] = f[j];
        c1_[j] = (fp(j) - f[j]) / h[j] - h[j] * (2.0 * mj + mn) / 6.0;
        c2_[j] = mj / 2.0;
        c3_[j] = (mn - mj) / (6.0 * h[j]);
    }
}

double PeriodicCubicSpline::reduce(double x) const {
    double r = x - u_[0];
    r -= period_ * std::floor(r / period_);
    return u_[0] + r;
}

int PeriodicCubicSpline::locate(double x) const {
    const int n = intervals();
    const double xr = reduce(x);
    int j = static_cast<int>((xr - u_[0]) * inv_mean_h_);
    if (j < 0)
        j = 0;
    if (j > n - 1)
        j = n - 1;
    while (j > 0 && xr < u_[j])
        --j;
    while (j < n - 1 && xr >= u_[j + 1])
        ++j;
    return j;
}

double PeriodicCubicSpline::eval_in(int interval, double x) const {
    const double d = x - u_[interval];
    return c0_[interval] + d * (c1_[interval] + d * (c2_[interval] + d * c3_[interval]));
}

double PeriodicCubicSpline::deriv_in(int interval, double x) const {
    const double d = x - u_[interval];
    return c1_[interval] + d * (2.0 * c2_[interval] + d * 3.0 * c3_[interval]);
}

double PeriodicCubicSpline::eval(double x) const {
    const double xr = reduce(x);
    return eval_in(locate(xr), xr);
}

double PeriodicCubicSpline::deriv(double x) const {
    const double xr = reduce(x);
    return deriv_in(locate(xr), xr);
}

} // namespace vortex
