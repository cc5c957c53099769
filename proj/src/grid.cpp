#include "vortex/grid.hpp"

#include <stdexcept>
#include <string>

namespace vortex {

std::vector<double> Grid1D::nodes() const {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j)
        x[j] = node(j);
    return x;
}

double Grid1D::wavenumber(int j) const {
    const int m = (j <= n / 2) ? j : j - n;
    return kTwoPi * m / length;
}

Grid1D make_grid(int n, double length) {
    if (n < 8)
        throw std::invalid_argument("make_grid: n must be >= 8, got " + std::to_string(n));
    if (n % 2 != 0)
        throw std::invalid_argument("make_grid: n must be even, got " + std::to_string(n));
    if (!(length > 0.0))
        throw std::invalid_argument("make_grid: length must be positive");
    Grid1D g;
    g.n = n;
    g.length = length;
    g.dx = length / n;
    return g;
}

} // namespace vortex
