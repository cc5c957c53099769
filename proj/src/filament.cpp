#include "vortex/filament.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "vortex/periodic_spline.hpp"

namespace vortex {

namespace {

// Gauss-Legendre 5 on [-1, 1].
constexpr double kGlX[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                            0.9061798459386640};
constexpr double kGlW[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                            0.4786286704993665, 0.2369268850561891};

// Non-adjacent nodes closer than `threshold` mean the polyline folds
// onto itself below its own resolution; spline reparameterization is
// meaningless there. The threshold sits well below the node spacing so
// transversal self-crossings of regular curves pass.
void check_self_touch(const Curve3D& curve, double threshold) {
    const int n = curve.size();
    const double cell = threshold;
    const double inv_cell = 1.0 / cell;
    auto key = [&](int ix, int iy, int iz) {
        return (static_cast<long long>(ix) * 73856093LL) ^
               (static_cast<long long>(iy) * 19349663LL) ^
               (static_cast<long long>(iz) * 83492791LL);
    };
    std::unordered_map<long long, std::vector<int>> bins;
    bins.reserve(2 * n);
    std::vector<std::array<int, 3>> cells(n);
    for (int j = 0; j < n; ++j) {
        const Vec3& r = curve.nodes[j];
        cells[j] = {static_cast<int>(std::floor(r.x() * inv_cell)),
                    static_cast<int>(std::floor(r.y() * inv_cell)),
                    static_cast<int>(std::floor(r.z() * inv_cell))};
        bins[key(cells[j][0], cells[j][1], cells[j][2])].push_back(j);
    }
    const double thr2 = threshold * threshold;
    for (int j = 0; j < n; ++j) {
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    auto it = bins.find(key(cells[j][0] + dx, cells[j][1] + dy, cells[j][2] + dz));
                    if (it == bins.end())
                        continue;
                    for (int i : it->second) {
                        if (i <= j)
                            continue;
                        const int sep = std::min(i - j, n - (i - j));
                        if (sep <= 2)
                            continue;
                        if ((curve.nodes[i] - curve.nodes[j]).squaredNorm() < thr2)
                            throw std::invalid_argument(
                                "resample_arclength: degenerate curve, nodes " +
                                std::to_string(j) + " and " + std::to_string(i) +
                                " self-touch below the node spacing");
                    }
                }
    }
}

// Component splines in the chord parameter; linear x-ramp removed so all
// three components are periodic.
struct CurveSplines {
    PeriodicCubicSpline sx, sy, sz;
    double alpha; // ramp slope wrap_x / U

    Vec3 position(int j, double u) const {
        return {sx.eval_in(j, u) + alpha * u, sy.eval_in(j, u), sz.eval_in(j, u)};
    }
    double speed(int j, double u) const {
        const double dx = sx.deriv_in(j, u) + alpha;
        const double dy = sy.deriv_in(j, u);
        const double dz = sz.deriv_in(j, u);
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }
    // integral of |r'| over [ua, ub] within breakpoint interval j
    double arc(int j, double ua, double ub) const {
        const double half = 0.5 * (ub - ua);
        const double mid = 0.5 * (ua + ub);
        double sum = 0.0;
        for (int q = 0; q < 5; ++q)
            sum += kGlW[q] * speed(j, mid + half * kGlX[q]);
        return sum * half;
    }
};

// Shared centered-difference LIA stencil; dl is the (uniform) node
// spacing of the resampled parent curve.
void lia_velocity_core(const std::vector<Vec3>& nodes, const Vec3& shift, double dl, double nu,
                       std::vector<Vec3>& out) {
    const int n = static_cast<int>(nodes.size());
    const double inv_dl2 = 1.0 / (dl * dl);
    out.resize(n);
    for (int j = 0; j < n; ++j) {
        const Vec3 rm = (j == 0) ? Vec3(nodes[n - 1] - shift) : nodes[j - 1];
        const Vec3 rp = (j == n - 1) ? Vec3(nodes[0] + shift) : nodes[j + 1];
        Vec3 tangent = rp - rm;
        tangent.normalize();
        const Vec3 second = (rp - 2.0 * nodes[j] + rm) * inv_dl2;
        out[j] = nu * tangent.cross(second);
    }
}

} // namespace

Curve3D make_helix_curve(const HelixSpec& spec, double length, int n) {
    spec.validate();
    if (!(length > 0.0))
        throw std::invalid_argument("make_helix_curve: length must be positive");
    if (!is_commensurate(spec.tau, length))
        throw std::invalid_argument("make_helix_curve: tau*L/2pi is not an integer");
    const double turns = std::abs(spec.tau) * length / kTwoPi;
    if (n < 8 || n < static_cast<int>(std::ceil(16.0 * turns)))
        throw std::invalid_argument("make_helix_curve: need at least 16 nodes per helix turn");
    Curve3D curve;
    curve.wrap_length = length;
    curve.nodes.reserve(n);
    const double dx = length / n;
    for (int j = 0; j < n; ++j) {
        const double x = j * dx;
        const double phase = spec.tau * x + spec.phase0;
        curve.nodes.emplace_back(x, spec.amplitude * std::cos(phase),
                                 spec.amplitude * std::sin(phase));
    }
    curve.validate();
    return curve;
}

Curve3D make_hasimoto_soliton_curve(double eta, double tau0, double length, int n) {
    if (!(eta > 0.0) || !(length > 0.0))
        throw std::invalid_argument("make_hasimoto_soliton_curve: eta and length must be positive");
    if (eta * length < 20.0)
        throw std::invalid_argument(
            "make_hasimoto_soliton_curve: eta*L >= 20 required to contain the soliton");
    const double k2 = eta * eta + tau0 * tau0;
    const double total_arc = length + 4.0 * eta / k2; // loop arclength excess
    const double ds = total_arc / n;
    if (n < 8 || ds > 1.0 / (32.0 * eta) * (1.0 + 1e-12))
        throw std::invalid_argument(
            "make_hasimoto_soliton_curve: need at least 32 nodes per core width 1/eta");

    const double s_core = 0.5 * total_arc;
    auto kappa = [&](double s) { return 2.0 * eta / std::cosh(eta * (s - s_core)); };

    // Frenet-Serret integration from the straight far field.
    struct Frame {
        Vec3 r, t, nrm, b;
    };
    auto derivative = [&](const Frame& f, double s) {
        const double k = kappa(s);
        Frame d;
        d.r = f.t;
        d.t = k * f.nrm;
        d.nrm = -k * f.t + tau0 * f.b;
        d.b = -tau0 * f.nrm;
        return d;
    };
    auto axpy = [](const Frame& f, double h, const Frame& d) {
        return Frame{f.r + h * d.r, f.t + h * d.t, f.nrm + h * d.nrm, f.b + h * d.b};
    };

    Frame f{Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    std::vector<Vec3> nodes(n);
    nodes[0] = f.r;
    const int substeps = 4;
    const double h = ds / substeps;
    for (int j = 0; j < n; ++j) {
        double s = j * ds;
        for (int m = 0; m < substeps; ++m) {
            const Frame k1 = derivative(f, s);
            const Frame k2 = derivative(axpy(f, 0.5 * h, k1), s + 0.5 * h);
            const Frame k3 = derivative(axpy(f, 0.5 * h, k2), s + 0.5 * h);
            const Frame k4 = derivative(axpy(f, h, k3), s + h);
            f.r += (h / 6.0) * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r);
            f.t += (h / 6.0) * (k1.t + 2.0 * k2.t + 2.0 * k3.t + k4.t);
            f.nrm += (h / 6.0) * (k1.nrm + 2.0 * k2.nrm + 2.0 * k3.nrm + k4.nrm);
            f.b += (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
            s += h;
        }
        f.t.normalize();
        f.nrm -= f.nrm.dot(f.t) * f.t;
        f.nrm.normalize();
        f.b = f.t.cross(f.nrm);
        if (j + 1 < n)
            nodes[j + 1] = f.r;
    }
    const Vec3 wrap = f.r - nodes[0];
    if (!(wrap.x() > 0.0))
        throw std::runtime_error("make_hasimoto_soliton_curve: integration produced no x span");

    // The transverse seam mismatch is exponentially small in eta*L;
    // spread it as a linear ramp so the periodic extension is continuous.
    const Vec3 seam(0.0, wrap.y(), wrap.z());
    for (int j = 0; j < n; ++j)
        nodes[j] -= (j * ds / total_arc) * seam;

    Curve3D curve;
    curve.nodes = std::move(nodes);
    curve.wrap_length = wrap.x();
    curve.validate();
    return curve;
}

Curve3D resample_arclength(const Curve3D& curve) {
    curve.validate();
    const int n = curve.size();

    std::vector<double> u(n + 1);
    u[0] = 0.0;
    for (int j = 0; j < n; ++j)
        u[j + 1] = u[j] + (curve.node_wrapped(j + 1) - curve.nodes[j]).norm();
    const double chord_total = u[n];
    const double mean = chord_total / n;
    for (int j = 0; j < n; ++j)
        if (u[j + 1] - u[j] < 1e-10 * mean)
            throw std::invalid_argument("resample_arclength: degenerate (collapsed) segment");
    check_self_touch(curve, 0.25 * mean);

    const Vec3 shift = curve.wrap_shift();
    const double alpha = shift.x() / chord_total;
    std::vector<double> ub(u.begin(), u.begin() + n), fx(n), fy(n), fz(n);
    for (int j = 0; j < n; ++j) {
        fx[j] = curve.nodes[j].x() - alpha * u[j];
        fy[j] = curve.nodes[j].y();
        fz[j] = curve.nodes[j].z();
    }
    const CurveSplines spl{PeriodicCubicSpline(ub, fx, chord_total),
                           PeriodicCubicSpline(ub, fy, chord_total),
                           PeriodicCubicSpline(ub, fz, chord_total), alpha};

    std::vector<double> lam(n + 1);
    lam[0] = 0.0;
    for (int j = 0; j < n; ++j)
        lam[j + 1] = lam[j] + spl.arc(j, u[j], u[j + 1]);
    const double arc_total = lam[n];
    const double target = arc_total / n;
    const double tol = 1e-13 * std::max(1.0, arc_total);

    Curve3D out = curve;
    int j = 0;
    for (int k = 1; k < n; ++k) {
        const double s = k * target;
        while (j < n - 1 && lam[j + 1] < s)
            ++j;
        double uu = u[j] + (s - lam[j]) / (lam[j + 1] - lam[j]) * (u[j + 1] - u[j]);
        for (int iter = 0; iter < 12; ++iter) {
            const double f = lam[j] + spl.arc(j, u[j], uu) - s;
            if (std::abs(f) <= tol)
                break;
            uu -= f / spl.speed(j, uu);
            uu = std::min(std::max(uu, u[j]), u[j + 1]);
        }
        out.nodes[k] = spl.position(j, uu);
    }
    return out;
}

CurveGeometry discrete_geometry(const Curve3D& curve) {
    curve.validate();
    const int n = curve.size();
    const double dl = polyline_length(curve) / n;
    const double inv_dl2 = 1.0 / (dl * dl);

    CurveGeometry g;
    g.mean_spacing = dl;
    g.tangent.resize(n);
    g.curvature.resize(n);
    g.torsion.assign(n, 0.0);
    g.arclength.resize(n);
    g.arclength[0] = 0.0;
    for (int j = 1; j < n; ++j)
        g.arclength[j] = g.arclength[j - 1] + (curve.nodes[j] - curve.nodes[j - 1]).norm();

    std::vector<Vec3> binormal(n);
    std::vector<char> frame_ok(n, 0);
    for (int j = 0; j < n; ++j) {
        const Vec3 rm = curve.node_wrapped(j - 1);
        const Vec3 rp = curve.node_wrapped(j + 1);
        Vec3 tangent = rp - rm;
        tangent.normalize();
        g.tangent[j] = tangent;
        const Vec3 second_raw = rp - 2.0 * curve.nodes[j] + rm;
        g.curvature[j] = second_raw.norm() * inv_dl2;
        if (second_raw.norm() > 1e-10 * dl) {
            const Vec3 normal = second_raw.normalized();
            binormal[j] = tangent.cross(normal).normalized();
            frame_ok[j] = 1;
        }
    }
    // torsion = rotation rate of the binormal about the tangent
    for (int j = 0; j < n; ++j) {
        const int jm = (j + n - 1) % n;
        const int jp = (j + 1) % n;
        if (!frame_ok[jm] || !frame_ok[j] || !frame_ok[jp])
            continue;
        const double sin_th = binormal[jm].cross(binormal[jp]).dot(g.tangent[j]);
        const double cos_th = binormal[jm].dot(binormal[jp]);
        g.torsion[j] = std::atan2(sin_th, cos_th) / (2.0 * dl);
    }
    return g;
}

std::vector<Vec3> lia_velocity(const Curve3D& curve, double nu) {
    curve.validate();
    if (!(nu > 0.0))
        throw std::invalid_argument("lia_velocity: nu must be positive");
    const double dl = polyline_length(curve) / curve.size();
    std::vector<Vec3> v;
    lia_velocity_core(curve.nodes, curve.wrap_shift(), dl, nu, v);
    return v;
}

double lia_max_dt(const Curve3D& curve, double nu) {
    const double dl = polyline_length(curve) / curve.size();
    return 0.2 * dl * dl / nu;
}

Curve3D step_lia_rk4(const Curve3D& curve, double nu, double dt) {
    if (!(nu > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("step_lia_rk4: nu and dt must be positive");
    const double budget = lia_max_dt(curve, nu);
    if (dt > budget * (1.0 + 1e-9)) {
        std::ostringstream msg;
        msg << "step_lia_rk4: dt = " << dt << " exceeds the stability budget nu*dt/dl^2 <= 0.2 "
            << "(max dt = " << budget << ")";
        throw std::invalid_argument(msg.str());
    }
    const int n = curve.size();
    const Vec3 shift = curve.wrap_shift();
    const double dl = polyline_length(curve) / n;

    std::vector<Vec3> k1, k2, k3, k4;
    std::vector<Vec3> work(n);
    lia_velocity_core(curve.nodes, shift, dl, nu, k1);
    for (int j = 0; j < n; ++j)
        work[j] = curve.nodes[j] + 0.5 * dt * k1[j];
    lia_velocity_core(work, shift, dl, nu, k2);
    for (int j = 0; j < n; ++j)
        work[j] = curve.nodes[j] + 0.5 * dt * k2[j];
    lia_velocity_core(work, shift, dl, nu, k3);
    for (int j = 0; j < n; ++j)
        work[j] = curve.nodes[j] + dt * k3[j];
    lia_velocity_core(work, shift, dl, nu, k4);

    Curve3D out = curve;
    for (int j = 0; j < n; ++j)
        out.nodes[j] =
            curve.nodes[j] + (dt / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    out.time = curve.time + dt;
    return resample_arclength(out);
}

} // namespace vortex
