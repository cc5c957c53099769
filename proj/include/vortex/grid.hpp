#pragma once

#include <vector>

namespace vortex {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Uniform periodic grid on [0, L): x_j = j*dx, j = 0..n-1.
// n is even so the Nyquist bin is unambiguous.
struct Grid1D {
    int n = 0;
    double length = 0.0;
    double dx = 0.0;

    double node(int j) const { return j * dx; }
    std::vector<double> nodes() const;

    // Signed wavenumber of DFT bin j; the Nyquist bin maps to +pi*n/L.
    double wavenumber(int j) const;
    int nyquist_bin() const { return n / 2; }

    bool operator==(const Grid1D&) const = default;
};

Grid1D make_grid(int n, double length);

} // namespace vortex
