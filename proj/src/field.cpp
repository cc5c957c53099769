#include "vortex/field.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex {

void ComplexField::validate() const {
    if (static_cast<int>(values.size()) != grid.n)
        throw std::invalid_argument("ComplexField: values size does not match grid");
    for (const Complex& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ComplexField: non-finite value");
}

ComplexField zero_field(const Grid1D& grid, double time) {
    return ComplexField{grid, std::vector<Complex>(grid.n, Complex{0.0, 0.0}), time};
}

void FieldState::validate() const {
    phi.validate();
    phi_t.validate();
    if (!(phi.grid == phi_t.grid))
        throw std::invalid_argument("FieldState: phi and phi_t grids differ");
    if (phi.time != phi_t.time)
        throw std::invalid_argument("FieldState: phi and phi_t time stamps differ");
}

void validate_kind(const EquationKind& kind) {
    std::visit(
        [](const auto& eq) {
            using T = std::decay_t<decltype(eq)>;
            if constexpr (std::is_same_v<T, Wave>) {
                if (!(eq.c > 0.0))
                    throw std::invalid_argument("Wave: c must be positive");
            } else if constexpr (std::is_same_v<T, Schrodinger>) {
                if (!(eq.nu > 0.0))
                    throw std::invalid_argument("Schrodinger: nu must be positive");
            } else {
                if (!(eq.c > 0.0))
                    throw std::invalid_argument("KleinGordon: c must be positive");
                if (eq.mu < 0.0)
                    throw std::invalid_argument("KleinGordon: mu must be non-negative");
            }
        },
        kind);
}

double dispersion_omega(const Wave& eq, double k) {
    return eq.c * std::abs(k);
}

double dispersion_omega(const Schrodinger& eq, double k) {
    return eq.nu * k * k;
}

double dispersion_omega(const KleinGordon& eq, double k) {
    return std::sqrt(eq.c * eq.c * k * k + eq.mu * eq.mu);
}

double dispersion_omega(const EquationKind& kind, double k) {
    return std::visit([k](const auto& eq) { return dispersion_omega(eq, k); }, kind);
}

} // namespace vortex
