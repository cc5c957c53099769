#pragma once

#include <vector>

namespace vortex {

// Interpolating cubic spline for a periodic function: f(u + period) = f(u).
// Breakpoints must be strictly increasing; the closing interval
// [u_{n-1}, u_0 + period] is implied. Moments are solved from the cyclic
// tridiagonal continuity system.
class PeriodicCubicSpline {
public:
    PeriodicCubicSpline(const std::vector<double>& u, const std::vector<double>& f, double period);

    double eval(double x) const;
    double deriv(double x) const;

    // Interval lookup with a near-uniform initial guess; O(1) for the
    // node distributions this project produces.
    int locate(double x) const;

    // Evaluation inside a known interval; x must be reduced to the base
    // period. Used by the resampler's inner loops.
    double eval_in(int interval, double x) const;
    double deriv_in(int interval, double x) const;

    double period() const { return period_; }
    int intervals() const { return static_cast<int>(c0_.size()); }
    double breakpoint(int j) const { return u_[j]; }

private:
    double reduce(double x) const;

    std::vector<double> u_;             // n+1 entries, u_[n] = u_[0] + period
    std::vector<double> c0_, c1_, c2_, c3_; // per-interval cubic in (x - u_j)
    double period_ = 0.0;
    double inv_mean_h_ = 0.0;
};

} // namespace vortex
