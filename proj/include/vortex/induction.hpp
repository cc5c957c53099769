#pragma once

#include <span>

#include "vortex/curve.hpp"

namespace vortex {

// Evaluation point for induced-velocity quadrature; h is the least
// distance to the unperturbed filament axis (the x axis).
struct FieldPoint {
    Vec3 position;
    double h;
};

FieldPoint field_point(const Vec3& position); // h = hypot(y, z)

struct InducedVelocity {
    Vec3 u;
    Complex transverse() const { return {u.y(), u.z()}; }
};

// Midpoint-rule Biot-Savart sum over the segments of an open polyline:
// u = (gamma / 4 pi) sum dr x s / |s|^3, s from segment midpoint to the
// field point. No images, no cutoff; used for finite-wire references.
Vec3 finite_polyline_velocity(std::span<const Vec3> nodes, const Vec3& point, double gamma);

// Same quadrature over an x-periodic (or closed) curve. Periodic curves
// are extended by +-x image copies until the image-pair contribution
// falls below 1e-8 of the running sum. Points closer than `cutoff` to
// any node (x-periodicity accounted for) are rejected; cutoff < 0 means
// one mean node spacing.
InducedVelocity biot_savart_segment_sum(const Curve3D& curve, const FieldPoint& point,
                                        double gamma, double cutoff = -1.0);

// delta u = sum(helix) - sum(baseline) with an identical image range so
// the near-singular parts cancel. Curves must share x-nodes and wrap.
InducedVelocity perturbation_velocity(const Curve3D& helix, const Curve3D& baseline,
                                      const FieldPoint& point, double gamma);

// The small-amplitude closed-form estimate i (gamma k / 4 pi h) phi.
// Order-of-magnitude only: it carries no decay in k h, so it is
// reported next to the quadrature, never asserted against it.
Complex small_amplitude_estimate(Complex phi_at_x, double k, double h, double gamma);

} // namespace vortex
