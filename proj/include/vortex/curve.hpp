#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vortex/field.hpp"

namespace vortex {

using Vec3 = Eigen::Vector3d;

// Discretized 3D filament. The working topology is x-periodic: node n
// wraps to node 0 shifted by (wrap_length, 0, 0). Closed loops (wrap
// shift zero) are supported as a test fixture for the geometry
// estimators only.
struct Curve3D {
    std::vector<Vec3> nodes;
    double wrap_length = 0.0;
    bool closed = false;
    double time = 0.0;

    int size() const { return static_cast<int>(nodes.size()); }
    Vec3 wrap_shift() const { return closed ? Vec3::Zero() : Vec3(wrap_length, 0.0, 0.0); }

    // Neighbor access with the periodic wrap applied.
    Vec3 node_wrapped(int j) const;

    void validate() const;
};

Curve3D closed_loop(std::vector<Vec3> nodes); // test fixture constructor

// Per-node Frenet data from centered differences in arclength.
struct CurveGeometry {
    std::vector<Vec3> tangent;
    std::vector<double> curvature;
    std::vector<double> torsion;
    std::vector<double> arclength; // cumulative chord length from node 0
    double mean_spacing = 0.0;
};

// Sum of chord lengths, wrap segment included.
double polyline_length(const Curve3D& curve);

// Render a field snapshot as the space curve (x_j, Re phi_j, Im phi_j).
Curve3D curve_from_field(const ComplexField& field);

} // namespace vortex
