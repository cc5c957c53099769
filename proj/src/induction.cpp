#include "vortex/induction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vortex {

namespace {

constexpr double kTailRel = 1e-8;   // image-pair truncation bound
constexpr int kMaxImages = 2000000; // hard stop; far points converge long before

// Midpoint-rule contribution of one segment, prefactor gamma/4pi applied
// by the caller.
inline Vec3 segment_term(const Vec3& a, const Vec3& b, const Vec3& point) {
    const Vec3 mid = 0.5 * (a + b);
    const Vec3 s = point - mid;
    const double s2 = s.squaredNorm();
    return (b - a).cross(s) / (s2 * std::sqrt(s2));
}

double min_node_distance(const Curve3D& curve, const Vec3& point) {
    // x reduced into the base period so image copies are covered
    double best = std::numeric_limits<double>::infinity();
    const double L = curve.wrap_length;
    for (const Vec3& r : curve.nodes) {
        Vec3 d = point - r;
        if (!curve.closed && L > 0.0)
            d.x() -= L * std::round(d.x() / L);
        best = std::min(best, d.norm());
    }
    return best;
}

double mean_spacing(const Curve3D& curve) {
    return polyline_length(curve) / curve.size();
}

// Sum over one periodic image copy (offset m*L x-hat) of every segment.
Vec3 image_sum(const Curve3D& curve, const Vec3& point, int image) {
    const int n = curve.size();
    const Vec3 offset = static_cast<double>(image) * curve.wrap_shift();
    Vec3 sum = Vec3::Zero();
    for (int j = 0; j < n; ++j) {
        const Vec3 a = curve.nodes[j] + offset;
        const Vec3 b = curve.node_wrapped(j + 1) + offset;
        sum += segment_term(a, b, point);
    }
    return sum;
}

} // namespace

FieldPoint field_point(const Vec3& position) {
    return FieldPoint{position, std::hypot(position.y(), position.z())};
}

Vec3 finite_polyline_velocity(std::span<const Vec3> nodes, const Vec3& point, double gamma) {
    if (nodes.size() < 2)
        throw std::invalid_argument("finite_polyline_velocity: need at least 2 nodes");
    Vec3 sum = Vec3::Zero();
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j)
        sum += segment_term(nodes[j], nodes[j + 1], point);
    return gamma / (4.0 * kPi) * sum;
}

InducedVelocity biot_savart_segment_sum(const Curve3D& curve, const FieldPoint& point,
                                        double gamma, double cutoff) {
    curve.validate();
    if (gamma == 0.0)
        throw std::invalid_argument("biot_savart_segment_sum: gamma must be nonzero");
    if (cutoff < 0.0)
        cutoff = mean_spacing(curve);
    if (min_node_distance(curve, point.position) < cutoff)
        throw std::invalid_argument(
            "biot_savart_segment_sum: evaluation point within cutoff of the curve");

    Vec3 sum = image_sum(curve, point.position, 0);
    if (!curve.closed) {
        for (int m = 1; m <= kMaxImages; ++m) {
            const Vec3 pair =
                image_sum(curve, point.position, m) + image_sum(curve, point.position, -m);
            sum += pair;
            if (m >= 3 && pair.norm() <= kTailRel * sum.norm())
                break;
        }
    }
    return InducedVelocity{gamma / (4.0 * kPi) * sum};
}

InducedVelocity perturbation_velocity(const Curve3D& helix, const Curve3D& baseline,
                                      const FieldPoint& point, double gamma) {
    helix.validate();
    baseline.validate();
    if (helix.size() != baseline.size() || helix.closed != baseline.closed ||
        std::abs(helix.wrap_length - baseline.wrap_length) >
            1e-12 * std::max(1.0, helix.wrap_length))
        throw std::invalid_argument("perturbation_velocity: discretizations do not match");
    for (int j = 0; j < helix.size(); ++j) {
        if (std::abs(helix.nodes[j].x() - baseline.nodes[j].x()) >
                1e-9 * std::max(1.0, helix.wrap_length) ||
            baseline.nodes[j].y() != 0.0 || baseline.nodes[j].z() != 0.0)
            throw std::invalid_argument(
                "perturbation_velocity: baseline must be straight on the helix x-nodes");
    }
    const double cutoff = mean_spacing(helix);
    if (min_node_distance(helix, point.position) < cutoff ||
        min_node_distance(baseline, point.position) < cutoff)
        throw std::invalid_argument(
            "perturbation_velocity: evaluation point within cutoff of a curve");

    // identical image range for both curves so near-singular parts cancel
    Vec3 delta = image_sum(helix, point.position, 0) - image_sum(baseline, point.position, 0);
    for (int m = 1; m <= kMaxImages; ++m) {
        const Vec3 pair = (image_sum(helix, point.position, m) -
                           image_sum(baseline, point.position, m)) +
                          (image_sum(helix, point.position, -m) -
                           image_sum(baseline, point.position, -m));
        delta += pair;
        if (m >= 3 && pair.norm() <= kTailRel * delta.norm())
            break;
    }
    return InducedVelocity{gamma / (4.0 * kPi) * delta};
}

Complex small_amplitude_estimate(Complex phi_at_x, double k, double h, double gamma) {
    if (!(h > 0.0))
        throw std::invalid_argument("small_amplitude_estimate: h must be positive");
    return Complex{0.0, 1.0} * (gamma * k / (4.0 * kPi * h)) * phi_at_x;
}

} // namespace vortex
