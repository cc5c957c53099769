#include "vortex/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace vortex {

namespace {

// Plan cache per transform size. Plans are created with FFTW_UNALIGNED
// so they can execute on plain std::vector storage.
class Dft {
public:
    explicit Dft(int n) : n_(n) {
        std::vector<Complex> a(n), b(n);
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD, flags);
        inv_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD, flags);
        if (!fwd_ || !inv_)
            throw std::runtime_error("Dft: fftw plan creation failed");
    }
    ~Dft() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(inv_);
    }
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;

    void forward(const std::vector<Complex>& in, std::vector<Complex>& out) const {
        out.resize(n_);
        fftw_execute_dft(fwd_,
                         reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data())),
                         reinterpret_cast<fftw_complex*>(out.data()));
    }
    void inverse(const std::vector<Complex>& in, std::vector<Complex>& out) const {
        out.resize(n_);
        fftw_execute_dft(inv_,
                         reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data())),
                         reinterpret_cast<fftw_complex*>(out.data()));
    }

private:
    int n_;
    fftw_plan fwd_;
    fftw_plan inv_;
};

const Dft& dft_for(int n) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<Dft>> cache;
    std::scoped_lock lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<Dft>(n)).first;
    return *it->second;
}

} // namespace

std::vector<Complex> dft_forward(const std::vector<Complex>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<Complex> coeffs;
    dft_for(n).forward(values, coeffs);
    const double scale = 1.0 / n;
    for (Complex& c : coeffs)
        c *= scale;
    return coeffs;
}

std::vector<Complex> dft_inverse(const std::vector<Complex>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    std::vector<Complex> values;
    dft_for(n).inverse(coeffs, values);
    return values;
}

ComplexField evolve_spectral(const Schrodinger& eq, const ComplexField& field, double dt) {
    validate_kind(eq);
    field.validate();
    std::vector<Complex> coeffs = dft_forward(field.values);
    for (int j = 0; j < field.grid.n; ++j) {
        const double k = field.grid.wavenumber(j);
        coeffs[j] *= std::polar(1.0, -eq.nu * k * k * dt);
    }
    ComplexField out = field;
    out.values = dft_inverse(coeffs);
    out.time = field.time + dt;
    return out;
}

namespace {

// Exact harmonic-oscillator rotation of each (phi, phi_t) mode pair with
// omega_j^2 = c^2 k_j^2 + mu^2.
FieldState evolve_oscillator(double c, double mu, const FieldState& state, double dt) {
    state.validate();
    const Grid1D& grid = state.phi.grid;
    std::vector<Complex> phi_hat = dft_forward(state.phi.values);
    std::vector<Complex> phit_hat = dft_forward(state.phi_t.values);
    for (int j = 0; j < grid.n; ++j) {
        const double k = grid.wavenumber(j);
        const double omega = std::sqrt(c * c * k * k + mu * mu);
        const double cosw = std::cos(omega * dt);
        const double sinw = std::sin(omega * dt);
        const double s = (omega == 0.0) ? dt : sinw / omega;
        const Complex p = phi_hat[j];
        const Complex q = phit_hat[j];
        phi_hat[j] = cosw * p + s * q;
        phit_hat[j] = -omega * sinw * p + cosw * q;
    }
    FieldState out = state;
    out.phi.values = dft_inverse(phi_hat);
    out.phi_t.values = dft_inverse(phit_hat);
    out.phi.time = state.phi.time + dt;
    out.phi_t.time = out.phi.time;
    return out;
}

} // namespace

FieldState evolve_spectral(const Wave& eq, const FieldState& state, double dt) {
    validate_kind(eq);
    return evolve_oscillator(eq.c, 0.0, state, dt);
}

FieldState evolve_spectral(const KleinGordon& eq, const FieldState& state, double dt) {
    validate_kind(eq);
    return evolve_oscillator(eq.c, eq.mu, state, dt);
}

ComplexField spectral_derivative(const ComplexField& field) {
    std::vector<Complex> coeffs = dft_forward(field.values);
    for (int j = 0; j < field.grid.n; ++j)
        coeffs[j] *= Complex{0.0, field.grid.wavenumber(j)};
    ComplexField out = field;
    out.values = dft_inverse(coeffs);
    return out;
}

void zero_nyquist(ComplexField& field) {
    std::vector<Complex> coeffs = dft_forward(field.values);
    coeffs[field.grid.nyquist_bin()] = Complex{0.0, 0.0};
    field.values = dft_inverse(coeffs);
}

Complex mode_coefficient(const ComplexField& field, int mode) {
    const Grid1D& grid = field.grid;
    const double k = kTwoPi * mode / grid.length;
    Complex sum{0.0, 0.0};
    for (int j = 0; j < grid.n; ++j)
        sum += field.values[j] * std::polar(1.0, -k * grid.node(j));
    return sum / static_cast<double>(grid.n);
}

} // namespace vortex
