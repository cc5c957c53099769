#pragma once

#include "vortex/field.hpp"

namespace vortex {

// Derivative used inside the energy functional. Each backend conserves
// the functional built from its own derivative.
enum class DerivKind { Spectral, CenteredDifference };

// Schrodinger: N = sum |phi|^2 dx.
double conserved_quantity(const Schrodinger& eq, const ComplexField& field);

// Wave: E = sum (|phi_t|^2 + c^2 |D phi|^2) dx.
double conserved_quantity(const Wave& eq, const FieldState& state, DerivKind deriv);

// Klein-Gordon: E = sum (|phi_t|^2 + c^2 |D phi|^2 + mu^2 |phi|^2) dx.
double conserved_quantity(const KleinGordon& eq, const FieldState& state, DerivKind deriv);

} // namespace vortex
