#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "vortex/grid.hpp"

namespace vortex {

using Complex = std::complex<double>;

// Transverse filament displacement phi = y + i z on a periodic grid.
struct ComplexField {
    Grid1D grid;
    std::vector<Complex> values;
    double time = 0.0;

    void validate() const; // size match, finite entries
};

ComplexField zero_field(const Grid1D& grid, double time = 0.0);

// (phi, dphi/dt) pair for the second-order equations.
struct FieldState {
    ComplexField phi;
    ComplexField phi_t;

    void validate() const; // matching grids and time stamps
};

// The three linear equations evolved by this library.
struct Wave {
    double c;
};
struct Schrodinger {
    double nu;
};
struct KleinGordon {
    double c;
    double mu; // mass frequency; the mass term coefficient is mu^2
};
using EquationKind = std::variant<Wave, Schrodinger, KleinGordon>;

void validate_kind(const EquationKind& kind);

// Closed-form dispersion relations.
double dispersion_omega(const Wave& eq, double k);        // c|k|
double dispersion_omega(const Schrodinger& eq, double k); // nu k^2
double dispersion_omega(const KleinGordon& eq, double k); // sqrt(c^2 k^2 + mu^2)
double dispersion_omega(const EquationKind& kind, double k);

} // namespace vortex
