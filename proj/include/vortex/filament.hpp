#pragma once

#include "vortex/curve.hpp"
#include "vortex/model.hpp"

namespace vortex {

// Helix space curve r_j = (x_j, a cos(tau x_j + phase0), a sin(tau x_j + phase0)).
// Node spacing is uniform in arclength by construction.
Curve3D make_helix_curve(const HelixSpec& spec, double length, int n);

// Localized curvature hump kappa(s) = 2 eta sech(eta (s - s0)) at constant
// torsion tau0, built by integrating the Frenet-Serret frame from a
// straight far-field start with RK4, core centered in the box.
// Preconditions: eta * length >= 20 and n >= 32 nodes per 1/eta.
Curve3D make_hasimoto_soliton_curve(double eta, double tau0, double length, int n);

// Redistribute nodes to equal arclength along the periodic cubic spline
// through the current nodes. Node 0 stays at its current curve point.
Curve3D resample_arclength(const Curve3D& curve);

// Centered-difference tangent / curvature, binormal-rotation torsion.
// Assumes near-uniform node spacing (resampled curve).
CurveGeometry discrete_geometry(const Curve3D& curve);

// Self-induction velocity nu * (t x r_ss) per node; exactly orthogonal
// to the discrete tangent.
std::vector<Vec3> lia_velocity(const Curve3D& curve, double nu);

// Classical RK4 update of all nodes under lia_velocity, followed by
// arclength resampling. Requires nu dt / dl^2 <= 0.2.
Curve3D step_lia_rk4(const Curve3D& curve, double nu, double dt);

double lia_max_dt(const Curve3D& curve, double nu); // the 0.2 budget

} // namespace vortex
