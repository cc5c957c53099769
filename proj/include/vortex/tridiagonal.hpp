#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace vortex {

// Thomas algorithm. a = subdiagonal (a[0] unused), b = diagonal,
// c = superdiagonal (c[n-1] unused). Requires diagonal dominance,
// which every caller in this project satisfies.
template <class T>
std::vector<T> solve_tridiagonal(const std::vector<T>& a, const std::vector<T>& b,
                                 const std::vector<T>& c, const std::vector<T>& r) {
    const std::size_t n = b.size();
    if (n < 2 || a.size() != n || c.size() != n || r.size() != n)
        throw std::invalid_argument("solve_tridiagonal: inconsistent sizes");
    std::vector<T> x(n), gam(n);
    T bet = b[0];
    x[0] = r[0] / bet;
    for (std::size_t j = 1; j < n; ++j) {
        gam[j] = c[j - 1] / bet;
        bet = b[j] - a[j] * gam[j];
        x[j] = (r[j] - a[j] * x[j - 1]) / bet;
    }
    for (std::size_t j = n - 1; j-- > 0;)
        x[j] -= gam[j + 1] * x[j + 1];
    return x;
}

// Cyclic variant via the Sherman-Morrison correction.
// corner_top = A[0][n-1], corner_bottom = A[n-1][0].
template <class T>
std::vector<T> solve_cyclic_tridiagonal(const std::vector<T>& a, const std::vector<T>& b,
                                        const std::vector<T>& c, T corner_top, T corner_bottom,
                                        const std::vector<T>& r) {
    const std::size_t n = b.size();
    if (n < 3)
        throw std::invalid_argument("solve_cyclic_tridiagonal: need n >= 3");
    const T alpha = corner_bottom;
    const T beta = corner_top;
    const T gamma = -b[0];

    std::vector<T> bb(b);
    bb[0] = b[0] - gamma;
    bb[n - 1] = b[n - 1] - alpha * beta / gamma;
    std::vector<T> x = solve_tridiagonal(a, bb, c, r);

    std::vector<T> u(n, T{});
    u[0] = gamma;
    u[n - 1] = alpha;
    std::vector<T> z = solve_tridiagonal(a, bb, c, u);

    const T fact = (x[0] + beta * z[n - 1] / gamma) / (T{1} + z[0] + beta * z[n - 1] / gamma);
    for (std::size_t j = 0; j < n; ++j)
        x[j] -= fact * z[j];
    return x;
}

} // namespace vortex
