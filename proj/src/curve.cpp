#include "vortex/curve.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex {

Vec3 Curve3D::node_wrapped(int j) const {
    const int n = size();
    int q = j / n;
    int r = j % n;
    if (r < 0) {
        r += n;
        q -= 1;
    }
    return nodes[r] + static_cast<double>(q) * wrap_shift();
}

void Curve3D::validate() const {
    const int n = size();
    if (n < 8)
        throw std::invalid_argument("Curve3D: need at least 8 nodes");
    if (!closed && !(wrap_length > 0.0))
        throw std::invalid_argument("Curve3D: x-periodic curve needs wrap_length > 0");
    for (const Vec3& r : nodes)
        if (!r.allFinite())
            throw std::invalid_argument("Curve3D: non-finite node");
    for (int j = 0; j < n; ++j) {
        const Vec3 d = node_wrapped(j + 1) - nodes[j];
        if (d.norm() == 0.0)
            throw std::invalid_argument("Curve3D: consecutive nodes coincide");
    }
}

Curve3D closed_loop(std::vector<Vec3> nodes) {
    Curve3D curve;
    curve.nodes = std::move(nodes);
    curve.closed = true;
    curve.wrap_length = 0.0;
    curve.validate();
    return curve;
}

double polyline_length(const Curve3D& curve) {
    double sum = 0.0;
    for (int j = 0; j < curve.size(); ++j)
        sum += (curve.node_wrapped(j + 1) - curve.nodes[j]).norm();
    return sum;
}

Curve3D curve_from_field(const ComplexField& field) {
    field.validate();
    Curve3D curve;
    curve.wrap_length = field.grid.length;
    curve.time = field.time;
    curve.nodes.reserve(field.grid.n);
    for (int j = 0; j < field.grid.n; ++j)
        curve.nodes.emplace_back(field.grid.node(j), field.values[j].real(),
                                 field.values[j].imag());
    return curve;
}

} // namespace vortex
