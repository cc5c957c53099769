#include "vortex/conserved.hpp"

#include "vortex/fd.hpp"
#include "vortex/spectral.hpp"

namespace vortex {

namespace {

double energy(double c, double mu, const FieldState& state, DerivKind deriv) {
    state.validate();
    const ComplexField dphi = (deriv == DerivKind::Spectral) ? spectral_derivative(state.phi)
                                                             : centered_derivative(state.phi);
    double sum = 0.0;
    for (int j = 0; j < state.phi.grid.n; ++j) {
        sum += std::norm(state.phi_t.values[j]) + c * c * std::norm(dphi.values[j]) +
               mu * mu * std::norm(state.phi.values[j]);
    }
    return sum * state.phi.grid.dx;
}

} // namespace

double conserved_quantity(const Schrodinger& eq, const ComplexField& field) {
    validate_kind(eq);
    field.validate();
    double sum = 0.0;
    for (const Complex& v : field.values)
        sum += std::norm(v);
    return sum * field.grid.dx;
}

double conserved_quantity(const Wave& eq, const FieldState& state, DerivKind deriv) {
    validate_kind(eq);
    return energy(eq.c, 0.0, state, deriv);
}

double conserved_quantity(const KleinGordon& eq, const FieldState& state, DerivKind deriv) {
    validate_kind(eq);
    return energy(eq.c, eq.mu, state, deriv);
}

} // namespace vortex
