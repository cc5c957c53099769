#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vortex/curve.hpp"
#include "vortex/field.hpp"
#include "vortex/model.hpp"

namespace vortex {

enum class FieldBackend { Spectral, FiniteDifference };

// One row of a dispersion scan.
struct DispersionSample {
    double k;
    double omega_measured;
    double omega_predicted;
    double rel_err;
};

struct LinearFit {
    double slope;
    double intercept;
    double rms_residual;
};

// Ordinary least squares y ~ intercept + slope * x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

// Recorded run histories; measurement is pure post-processing on these.
struct FieldHistory {
    std::vector<ComplexField> snapshots;
};
struct SecondOrderHistory {
    std::vector<FieldState> snapshots;
};
struct CurveHistory {
    std::vector<Curve3D> snapshots;
};

// Run loops. Snapshots are taken every `cadence` steps (step 0 included);
// time stamps are step * dt throughout.
FieldHistory run_schrodinger(double nu, FieldBackend backend, const ComplexField& phi0,
                             double dt, int steps, int cadence);
SecondOrderHistory run_second_order(const KleinGordon& eq, FieldBackend backend,
                                    const FieldState& initial, double dt, int steps, int cadence);
CurveHistory run_lia(const Curve3D& initial, double nu, double dt, int steps, int cadence);

struct FrequencyMeasurement {
    double omega;
    double residual; // slope-normalized phase-fit residual, 1/time
    bool flagged;    // residual above 1e-3 * |omega|
};

struct ModeRunParams {
    int n = 256;
    double length = kTwoPi;
    double dt = 2e-3;
    int steps = 2000;
    int cadence = 5;
};

// Initializes the single mode k (right-rotating branch for second-order
// kinds), runs it, unwraps the phase of the k-th coefficient and fits
// the slope. Requires |k| <= n/4 * 2 pi / L.
FrequencyMeasurement measure_mode_frequency(const EquationKind& kind, double k,
                                            FieldBackend backend, const ModeRunParams& run = {});

std::vector<DispersionSample> dispersion_scan(const EquationKind& kind,
                                              const std::vector<double>& ks, FieldBackend backend,
                                              const ModeRunParams& run = {});

struct RotationMeasurement {
    double omega;
    double residual;
    bool flagged; // station amplitude varied by more than 10%
};

// Phase angle atan2(z, y) at the node-0 station, unwrapped and fitted
// against time.
RotationMeasurement measure_rotation_rate(const CurveHistory& history);

struct PacketRunParams {
    int n = 1024;
    double length = 64.0;
    double sigma = 2.0; // envelope width; must span >= 16 cells
    double x0 = 16.0;   // initial packet center
    double dt = 0.01;
    double duration = 4.0;
    int cadence = 25;
};

struct GroupVelocityMeasurement {
    double v;
    double residual;
    std::vector<double> times;
    std::vector<double> centroids;
};

// Gaussian packet at carrier k0 under the spectral Schrodinger flow;
// |phi|^2 centroid tracked through the periodic wrap and fitted
// linearly. Throws if the packet reaches the box seam or spreads by
// more than 50%.
GroupVelocityMeasurement measure_group_velocity(double nu, double k0,
                                                const PacketRunParams& run = {});

struct SolitonSpeedMeasurement {
    double v;
    double residual;
    std::vector<double> times;
    std::vector<double> peak_positions; // arclength coordinate of the curvature max
};

// Tracks the curvature maximum (parabolic sub-node interpolation) along
// arclength and fits linear drift. Aborts if the peak comes within
// 5/eta of the box seam, eta inferred from the initial curvature max.
SolitonSpeedMeasurement measure_soliton_speed(const CurveHistory& history);

struct LinearizationResult {
    double max_deviation; // max over nodes and times of |phi_LIA - phi_field| / a
    int steps;
    double dt;
};

// Runs the same helix through the full LIA integrator and through the
// spectral Schrodinger flow of phi = y + i z, and compares transverse
// node trajectories.
LinearizationResult linearization_consistency(double a_over_L, double tau, double nu,
                                              double duration, int n = 256,
                                              double length = kTwoPi);

// Scenario-level record for reports; every fitted quantity carries its
// residual.
struct MeasurementReport {
    std::string scenario;
    std::string quantity;
    double value = 0.0;
    double residual = 0.0;
    std::vector<std::pair<std::string, double>> metadata;
};

} // namespace vortex
