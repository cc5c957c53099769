#pragma once

#include "vortex/field.hpp"

namespace vortex {

// Model constants: elastic wave speed c, self-induction coefficient nu,
// linear fluid density zeta, circulation gamma.
struct PhysicalParams {
    double c = 1.0;
    double nu = 0.5;
    double zeta = 1.0;
    double gamma = 1.0;

    void validate() const; // c, nu, zeta > 0 and gamma != 0
};

// Quantities derived from the model constants.
struct DerivedParams {
    double a0;   // minimal amplitude, 2 nu / c
    double m0;   // elementary mass, zeta a0
    double hbar; // 2 nu zeta a0
    double mu;   // mass frequency m0 c^2 / hbar (= c^2 / (2 nu))
    int m_count; // number of elementary helices
    double m_eps; // extended mass, m_count zeta a0
};

DerivedParams derive_params(const PhysicalParams& p, int m_count = 1);

// Two ways to pin the helix torsion when forming the mass coefficient:
// GroupVelocity takes 2 nu tau = c, Frequency takes nu tau^2 = mu.
enum class LedgerClosure { GroupVelocity, Frequency };

// Both sides of the mass-coefficient identification. The ratio is
// reported as-is; the two closures give 1/4 and 1 respectively.
struct LedgerReport {
    LedgerClosure closure;
    double tau;
    double lhs_coefficient; // nu^2 tau^4
    double rhs_coefficient; // (m0 c^2 / hbar)^2
    double ratio;           // lhs / rhs
};

LedgerReport mass_coefficient_ledger(const PhysicalParams& p, LedgerClosure closure);

// Circularly polarized helix: amplitude, torsion (= wavenumber), phase.
struct HelixSpec {
    double amplitude = 0.0;
    double tau = 1.0;
    double phase0 = 0.0;

    void validate() const; // amplitude >= 0, tau != 0
};

// True when tau*L/(2 pi) is an integer, i.e. the helix fits the box.
bool is_commensurate(double tau, double length, double tol = 1e-9);

// phi_j = a exp[i(tau x_j - omega t + phase0)].
ComplexField helix_field_snapshot(const HelixSpec& spec, double omega,
                                  const Grid1D& grid, double t);

} // namespace vortex
