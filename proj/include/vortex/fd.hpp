#pragma once

#include "vortex/field.hpp"

namespace vortex {

// Trapezoidal (Crank-Nicolson) step for the self-induction equation.
// Unitary in the discrete l2 norm, no stability bound. The cyclic
// tridiagonal system (I - i r D2) phi^{n+1} = (I + i r D2) phi^n is
// solved each step, r = nu dt / (2 dx^2).
class CrankNicolsonStepper {
public:
    CrankNicolsonStepper(const Schrodinger& eq, const Grid1D& grid, double dt);

    // Advances the field in place; the time stamp moves by dt.
    void step(ComplexField& field) const;

    double dt() const { return dt_; }

private:
    Grid1D grid_;
    double dt_;
    Complex lhs_diag_, lhs_off_, rhs_diag_, rhs_off_;
};

// Three-level explicit update (leapfrog) for wave / Klein-Gordon with the
// second-difference Laplacian, kept behind a (phi, phi_t) interface.
// The previous level is stored internally; phi_t is read out as the
// centered difference (phi^{n+1} - phi^{n-1}) / (2 dt).
// Wave is the mu = 0 case.
class LeapfrogStepper {
public:
    // Taylor seeding of the previous level from (phi, phi_t).
    LeapfrogStepper(const KleinGordon& eq, const FieldState& initial, double dt);
    LeapfrogStepper(const Wave& eq, const FieldState& initial, double dt);

    // Two-level seeding: phi at t0-dt and t0. Exact seeding makes the
    // scheme exact at the magic time step c dt = dx (mu = 0).
    LeapfrogStepper(const KleinGordon& eq, const ComplexField& phi_prev,
                    const ComplexField& phi_curr, double dt);

    void step();
    void advance(int steps);

    FieldState state() const;
    double time() const { return t0_ + step_count_ * dt_; }

private:
    std::vector<Complex> rhs_operator(const std::vector<Complex>& v) const; // c^2 D2 v - mu^2 v

    Grid1D grid_;
    double c_, mu_, dt_, t0_;
    long step_count_ = 0;
    std::vector<Complex> prev_, curr_;
};

// dt stability checks; violations throw with a diagnostic.
void check_cfl(double c, const Grid1D& grid, double dt); // c dt / dx <= 1

// One-step pure-function forms.
ComplexField step_fd(const Schrodinger& eq, const ComplexField& field, double dt);
FieldState step_fd(const Wave& eq, const FieldState& state, double dt);
FieldState step_fd(const KleinGordon& eq, const FieldState& state, double dt);

// d/dx by centered differences, periodic.
ComplexField centered_derivative(const ComplexField& field);

} // namespace vortex
