#include "vortex/fd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vortex/tridiagonal.hpp"

namespace vortex {

void check_cfl(double c, const Grid1D& grid, double dt) {
    const double cfl = c * dt / grid.dx;
    if (cfl > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "CFL violation: c*dt/dx = " << cfl << " exceeds 1 (c=" << c << ", dt=" << dt
            << ", dx=" << grid.dx << ")";
        throw std::invalid_argument(msg.str());
    }
    if (!(dt > 0.0))
        throw std::invalid_argument("step_fd: dt must be positive");
}

CrankNicolsonStepper::CrankNicolsonStepper(const Schrodinger& eq, const Grid1D& grid, double dt)
    : grid_(grid), dt_(dt) {
    validate_kind(eq);
    if (!(dt > 0.0))
        throw std::invalid_argument("CrankNicolsonStepper: dt must be positive");
    const double r = eq.nu * dt / (2.0 * grid.dx * grid.dx);
    lhs_diag_ = Complex{1.0, 2.0 * r};
    lhs_off_ = Complex{0.0, -r};
    rhs_diag_ = Complex{1.0, -2.0 * r};
    rhs_off_ = Complex{0.0, r};
}

void CrankNicolsonStepper::step(ComplexField& field) const {
    const int n = grid_.n;
    if (static_cast<int>(field.values.size()) != n)
        throw std::invalid_argument("CrankNicolsonStepper: field grid mismatch");
    std::vector<Complex> rhs(n);
    for (int j = 0; j < n; ++j) {
        const Complex& left = field.values[(j + n - 1) % n];
        const Complex& right = field.values[(j + 1) % n];
        rhs[j] = rhs_diag_ * field.values[j] + rhs_off_ * (left + right);
    }
    const std::vector<Complex> a(n, lhs_off_), b(n, lhs_diag_), c(n, lhs_off_);
    field.values = solve_cyclic_tridiagonal(a, b, c, lhs_off_, lhs_off_, rhs);
    field.time += dt_;
}

LeapfrogStepper::LeapfrogStepper(const KleinGordon& eq, const FieldState& initial, double dt)
    : grid_(initial.phi.grid), c_(eq.c), mu_(eq.mu), dt_(dt), t0_(initial.phi.time) {
    validate_kind(eq);
    initial.validate();
    check_cfl(c_, grid_, dt);
    curr_ = initial.phi.values;
    // Taylor seed: phi^{-1} = phi - dt phi_t + dt^2/2 (c^2 D2 - mu^2) phi.
    const std::vector<Complex> lap = rhs_operator(curr_);
    prev_.resize(grid_.n);
    for (int j = 0; j < grid_.n; ++j)
        prev_[j] = curr_[j] - dt * initial.phi_t.values[j] + 0.5 * dt * dt * lap[j];
}

LeapfrogStepper::LeapfrogStepper(const Wave& eq, const FieldState& initial, double dt)
    : LeapfrogStepper(KleinGordon{eq.c, 0.0}, initial, dt) {}

LeapfrogStepper::LeapfrogStepper(const KleinGordon& eq, const ComplexField& phi_prev,
                                 const ComplexField& phi_curr, double dt)
    : grid_(phi_curr.grid), c_(eq.c), mu_(eq.mu), dt_(dt), t0_(phi_curr.time) {
    validate_kind(eq);
    phi_prev.validate();
    phi_curr.validate();
    if (!(phi_prev.grid == phi_curr.grid))
        throw std::invalid_argument("LeapfrogStepper: level grids differ");
    if (std::abs((phi_curr.time - phi_prev.time) - dt) > 1e-12 * std::max(1.0, std::abs(dt)))
        throw std::invalid_argument("LeapfrogStepper: levels must be dt apart");
    check_cfl(c_, grid_, dt);
    prev_ = phi_prev.values;
    curr_ = phi_curr.values;
}

std::vector<Complex> LeapfrogStepper::rhs_operator(const std::vector<Complex>& v) const {
    const int n = grid_.n;
    const double inv_dx2 = 1.0 / (grid_.dx * grid_.dx);
    std::vector<Complex> out(n);
    for (int j = 0; j < n; ++j) {
        const Complex& left = v[(j + n - 1) % n];
        const Complex& right = v[(j + 1) % n];
        out[j] = c_ * c_ * (right - 2.0 * v[j] + left) * inv_dx2 - mu_ * mu_ * v[j];
    }
    return out;
}

void LeapfrogStepper::step() {
    const std::vector<Complex> lv = rhs_operator(curr_);
    std::vector<Complex> next(grid_.n);
    for (int j = 0; j < grid_.n; ++j)
        next[j] = 2.0 * curr_[j] - prev_[j] + dt_ * dt_ * lv[j];
    prev_ = std::move(curr_);
    curr_ = std::move(next);
    ++step_count_;
}

void LeapfrogStepper::advance(int steps) {
    for (int i = 0; i < steps; ++i)
        step();
}

FieldState LeapfrogStepper::state() const {
    // phi_t^n = (phi^{n+1} - phi^{n-1}) / (2 dt), one lookahead update.
    const std::vector<Complex> lv = rhs_operator(curr_);
    FieldState out;
    out.phi = ComplexField{grid_, curr_, time()};
    out.phi_t = ComplexField{grid_, std::vector<Complex>(grid_.n), time()};
    const double inv_2dt = 1.0 / (2.0 * dt_);
    for (int j = 0; j < grid_.n; ++j) {
        const Complex next = 2.0 * curr_[j] - prev_[j] + dt_ * dt_ * lv[j];
        out.phi_t.values[j] = (next - prev_[j]) * inv_2dt;
    }
    return out;
}

ComplexField step_fd(const Schrodinger& eq, const ComplexField& field, double dt) {
    field.validate();
    CrankNicolsonStepper stepper(eq, field.grid, dt);
    ComplexField out = field;
    stepper.step(out);
    return out;
}

FieldState step_fd(const KleinGordon& eq, const FieldState& state, double dt) {
    LeapfrogStepper stepper(eq, state, dt);
    stepper.step();
    return stepper.state();
}

FieldState step_fd(const Wave& eq, const FieldState& state, double dt) {
    return step_fd(KleinGordon{eq.c, 0.0}, state, dt);
}

ComplexField centered_derivative(const ComplexField& field) {
    const int n = field.grid.n;
    const double inv_2dx = 1.0 / (2.0 * field.grid.dx);
    ComplexField out = field;
    for (int j = 0; j < n; ++j)
        out.values[j] = (field.values[(j + 1) % n] - field.values[(j + n - 1) % n]) * inv_2dx;
    return out;
}

} // namespace vortex
