#include "linpot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linpot/errors.hpp"
#include "linpot/spectral.hpp"

namespace linpot {

void IntegratorConfig::validate() const {
    if (!(dt > 0.0)) {
        throw DomainError("IntegratorConfig: dt must be positive");
    }
    if (!(boundary_tail > 0.0) || boundary_check_every < 1) {
        throw DomainError("IntegratorConfig: invalid boundary settings");
    }
}

SplitStepPropagator::SplitStepPropagator(ProfilePair params, const Grid& grid, double hbar)
    : params_(std::move(params)), grid_(grid), hbar_(hbar), xs_(grid.points()) {
    grid_.validate();
    if (!(hbar_ > 0.0)) {
        throw DomainError("SplitStepPropagator: hbar must be positive");
    }
    const auto k = spectral::wavenumbers(grid_);
    k2_.resize(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) {
        k2_[j] = k[j] * k[j];
    }
}

void SplitStepPropagator::step(std::vector<cplx>& psi, double t, double h) const {
    const double mid = t + 0.5 * h;
    const double mass = params_.mass(mid);
    const double force = params_.force(mid);
    if (!(mass > 0.0)) {
        throw DomainError("SplitStepPropagator: non-positive mass");
    }
    // exp(-i V h/(2 hbar)) with V = -x F
    const double kick = 0.5 * force * h / hbar_;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        psi[j] *= std::polar(1.0, kick * xs_[j]);
    }
    auto spec = spectral::forward(psi);
    const double drift = -hbar_ * h / (2.0 * mass);
    for (std::size_t j = 0; j < spec.size(); ++j) {
        spec[j] *= std::polar(1.0, drift * k2_[j]);
    }
    psi = spectral::inverse(spec);
    for (std::size_t j = 0; j < psi.size(); ++j) {
        psi[j] *= std::polar(1.0, kick * xs_[j]);
    }
}

double SplitStepPropagator::kinetic_phase(std::span<const cplx> psi, double h, double m_min) const {
    const auto spec = spectral::forward(psi);
    double total = 0.0;
    for (const auto& c : spec) {
        total += std::norm(c);
    }
    double k2_max = 0.0;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        if (std::norm(spec[j]) > 1e-14 * total) {
            k2_max = std::max(k2_max, k2_[j]);
        }
    }
    return hbar_ * k2_max * std::abs(h) / (2.0 * m_min);
}

WaveSample ssf_propagate(const ProfilePair& params, const WaveSample& psi0, double t1,
                         const IntegratorConfig& config) {
    config.validate();
    const double t0 = psi0.t();
    const double span = t1 - t0;
    if (span == 0.0) {
        return psi0;
    }
    const auto steps = static_cast<long long>(std::ceil(std::abs(span) / config.dt - 1e-9));
    const double h = span / static_cast<double>(steps);
    SplitStepPropagator prop(params, psi0.grid(), psi0.hbar());

    if (tail_mass(psi0) > config.boundary_tail) {
        throw BoundaryError("ssf_propagate: initial state already touches the grid edge");
    }
    double m_min = params.mass(std::min(t0, t1));
    for (int i = 1; i <= 64; ++i) {
        m_min = std::min(m_min, params.mass(std::min(t0, t1) + std::abs(span) * i / 64.0));
    }
    if (prop.kinetic_phase(psi0.values(), h, m_min) >= 0.25 * std::numbers::pi) {
        throw ResolutionError("ssf_propagate: kinetic phase per step exceeds pi/4; reduce dt");
    }

    std::vector<cplx> psi(psi0.values().begin(), psi0.values().end());
    const WaveSample probe_shape = psi0;
    for (long long s = 0; s < steps; ++s) {
        const double t = t0 + static_cast<double>(s) * h;
        prop.step(psi, t, h);
        if ((s + 1) % config.boundary_check_every == 0 || s + 1 == steps) {
            if (tail_mass(probe_shape.with_values(psi)) > config.boundary_tail) {
                throw BoundaryError("ssf_propagate: wave function reached the grid boundary at t=" +
                                    std::to_string(t + h));
            }
        }
    }
    return WaveSample(psi0.grid(), std::move(psi), t1, psi0.hbar());
}

double norm(const WaveSample& psi) {
    double sum = 0.0;
    for (const auto& v : psi.values()) {
        sum += std::norm(v);
    }
    return std::sqrt(sum * psi.grid().dx());
}

namespace {

void require_same_grid(const WaveSample& a, const WaveSample& b) {
    if (!(a.grid() == b.grid())) {
        throw ShapeError("wave samples live on different grids");
    }
}

}  // namespace

double l2_distance(const WaveSample& a, const WaveSample& b, double window) {
    require_same_grid(a, b);
    if (window >= 1.0) {
        double sum = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            sum += std::norm(a[j] - b[j]);
        }
        return std::sqrt(sum * a.grid().dx());
    }
    const Window w = central_window(a.grid(), window);
    double sum = 0.0;
    for (std::size_t j = w.first; j < w.last; ++j) {
        const double weight = (j == w.first || j + 1 == w.last) ? 0.5 : 1.0;
        sum += weight * std::norm(a[j] - b[j]);
    }
    return std::sqrt(sum * a.grid().dx());
}

cplx overlap(const WaveSample& a, const WaveSample& b) {
    require_same_grid(a, b);
    cplx sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        sum += std::conj(a[j]) * b[j];
    }
    return sum * a.grid().dx();
}

double mean_position(const WaveSample& psi) {
    double mass = 0.0;
    double moment = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const double p = std::norm(psi[j]);
        mass += p;
        moment += p * psi.grid().x(j);
    }
    return moment / mass;
}

}  // namespace linpot
