#pragma once

#include "vortex/field.hpp"

namespace vortex {

// Normalized DFT pair: forward gives coefficients F_m with
// f_j = sum_m F_m exp(i k_m x_j), so a unit plane wave has F = 1.
std::vector<Complex> dft_forward(const std::vector<Complex>& values);
std::vector<Complex> dft_inverse(const std::vector<Complex>& coeffs);

// Exact per-mode evolution of the constant-coefficient equations.
// Schrodinger modes pick up exp(-i nu k^2 dt); Wave/KleinGordon modes
// rotate as harmonic oscillators with omega^2 = c^2 k^2 (+ mu^2).
ComplexField evolve_spectral(const Schrodinger& eq, const ComplexField& field, double dt);
FieldState evolve_spectral(const Wave& eq, const FieldState& state, double dt);
FieldState evolve_spectral(const KleinGordon& eq, const FieldState& state, double dt);

// d/dx via ik multiplication in mode space.
ComplexField spectral_derivative(const ComplexField& field);

// Drop the (direction-ambiguous) Nyquist mode; applied to initial data
// of spectral runs.
void zero_nyquist(ComplexField& field);

// Normalized projection onto one mode: (1/n) sum_j f_j exp(-i k_m x_j).
Complex mode_coefficient(const ComplexField& field, int mode);

} // namespace vortex
