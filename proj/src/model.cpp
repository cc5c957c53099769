#include "vortex/model.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex {

void PhysicalParams::validate() const {
    if (!(c > 0.0))
        throw std::invalid_argument("PhysicalParams: c must be positive");
    if (!(nu > 0.0))
        throw std::invalid_argument("PhysicalParams: nu must be positive");
    if (!(zeta > 0.0))
        throw std::invalid_argument("PhysicalParams: zeta must be positive");
    if (gamma == 0.0)
        throw std::invalid_argument("PhysicalParams: gamma must be nonzero");
}

DerivedParams derive_params(const PhysicalParams& p, int m_count) {
    p.validate();
    if (m_count < 1)
        throw std::invalid_argument("derive_params: m_count must be >= 1");
    DerivedParams d;
    d.a0 = 2.0 * p.nu / p.c;
    d.m0 = p.zeta * d.a0;
    d.hbar = 2.0 * p.nu * p.zeta * d.a0;
    d.mu = d.m0 * p.c * p.c / d.hbar;
    d.m_count = m_count;
    d.m_eps = m_count * p.zeta * d.a0;
    return d;
}

LedgerReport mass_coefficient_ledger(const PhysicalParams& p, LedgerClosure closure) {
    const DerivedParams d = derive_params(p);
    LedgerReport rep;
    rep.closure = closure;
    // GroupVelocity: the soliton / group speed 2 nu tau pinned to c.
    // Frequency: the rotation rate nu tau^2 pinned to the mass frequency.
    rep.tau = (closure == LedgerClosure::GroupVelocity) ? p.c / (2.0 * p.nu)
                                                        : std::sqrt(d.mu / p.nu);
    const double tau2 = rep.tau * rep.tau;
    rep.lhs_coefficient = p.nu * p.nu * tau2 * tau2;
    rep.rhs_coefficient = d.mu * d.mu;
    rep.ratio = rep.lhs_coefficient / rep.rhs_coefficient;
    return rep;
}

void HelixSpec::validate() const {
    if (amplitude < 0.0)
        throw std::invalid_argument("HelixSpec: amplitude must be non-negative");
    if (tau == 0.0)
        throw std::invalid_argument("HelixSpec: tau must be nonzero");
    if (!std::isfinite(amplitude) || !std::isfinite(tau) || !std::isfinite(phase0))
        throw std::invalid_argument("HelixSpec: non-finite entry");
}

bool is_commensurate(double tau, double length, double tol) {
    const double turns = tau * length / kTwoPi;
    return std::abs(turns - std::round(turns)) <= tol * std::max(1.0, std::abs(turns));
}

ComplexField helix_field_snapshot(const HelixSpec& spec, double omega, const Grid1D& grid,
                                  double t) {
    spec.validate();
    if (!is_commensurate(spec.tau, grid.length))
        throw std::invalid_argument(
            "helix_field_snapshot: tau*L/2pi is not an integer; field would not be periodic");
    ComplexField field = zero_field(grid, t);
    for (int j = 0; j < grid.n; ++j) {
        const double phase = spec.tau * grid.node(j) - omega * t + spec.phase0;
        field.values[j] = spec.amplitude * Complex{std::cos(phase), std::sin(phase)};
    }
    return field;
}

} // namespace vortex
