#include "linpot/analytic_states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "linpot/errors.hpp"
#include "linpot/quadrature.hpp"
#include "linpot/special_functions.hpp"
#include "linpot/unitary.hpp"

namespace linpot {

void AirySpec::validate() const {
    if (!(beta > 0.0) || !(m > 0.0) || !(hbar > 0.0)) {
        throw DomainError("AirySpec: beta, m and hbar must be positive");
    }
    if (!std::isfinite(e) || !std::isfinite(c)) {
        throw DomainError("AirySpec: e and c must be finite");
    }
}

double AirySpec::kappa() const { return beta / std::cbrt(hbar * hbar); }

namespace {

double checked_ai(double z) {
    if (!(std::abs(z) <= kAiryRangeLimit)) {
        throw RangeError("Airy state: argument " + std::to_string(z) +
                         " outside |z| <= 120; shrink the grid or beta");
    }
    return airy_ai(z);
}

}  // namespace

WaveSample airy_stationary(const AirySpec& spec, double t, const Grid& grid) {
    spec.validate();
    grid.validate();
    const double kappa = spec.kappa();
    const cplx time_phase = std::polar(1.0, -spec.energy() * t / spec.hbar);
    std::vector<cplx> values(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        values[j] = checked_ai(-kappa * (grid.x(j) + spec.e)) * time_phase;
    }
    return WaveSample(grid, std::move(values), t, spec.hbar);
}

cplx airy_free_value(const AirySpec& spec, double t, double x) {
    const double b3 = spec.beta * spec.beta * spec.beta;
    const double m = spec.m;
    const double xf = b3 * t * t / (4.0 * m * m) + spec.c * t;
    const double vf = b3 * t / (2.0 * m * m) + spec.c;
    const double phase = m * m * m / (3.0 * b3) * (vf * vf * vf - spec.c * spec.c * spec.c) -
                         m * vf * (x + xf + spec.e);
    return checked_ai(-spec.kappa() * (x + xf + spec.e)) * std::polar(1.0, phase / spec.hbar);
}

WaveSample airy_free_packet(const AirySpec& spec, double t, const Grid& grid) {
    spec.validate();
    grid.validate();
    std::vector<cplx> values(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        values[j] = airy_free_value(spec, t, grid.x(j));
    }
    return WaveSample(grid, std::move(values), t, spec.hbar);
}

WaveSample airy_general_packet(const AirySpec& spec, const ClassicalPath& forced_path, double t,
                               const Grid& grid) {
    spec.validate();
    grid.validate();
    const PathPoint point = forced_path.at(t);
    const double tau = spec.m * forced_path.inverse_mass_integral(t);
    const UnitaryData u{point.x, point.xdot, point.xi, point.mass, spec.hbar};
    std::vector<cplx> values(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        values[j] = unitary_phase(u, x) * airy_free_value(spec, tau, x - point.x);
    }
    return WaveSample(grid, std::move(values), t, spec.hbar);
}

WaveSample airy_general_packet(const AirySpec& spec, const ProfilePair& params, double t,
                               const Grid& grid) {
    return airy_general_packet(spec, ClassicalPath(params, 0.0, 0.0), t, grid);
}

double airy_general_argument(const AirySpec& spec, const ClassicalPath& forced_path, double t,
                             double x) {
    const double b3 = spec.beta * spec.beta * spec.beta;
    const double tau = spec.m * forced_path.inverse_mass_integral(t);
    const double xf = b3 * tau * tau / (4.0 * spec.m * spec.m) + spec.c * tau;
    return -spec.kappa() * (x - forced_path.trajectory(t).x + xf + spec.e);
}

// ---------------------------------------------------------------------------

cplx free_gaussian_value(const GaussianSpec& spec, double v, double hbar, double x) {
    const double s2 = spec.sigma * spec.sigma;
    const cplx a(1.0, hbar * v / s2);
    const double centre = spec.x0 + hbar * spec.k0 * v;
    const double dx = x - centre;
    const cplx exponent = -dx * dx / (2.0 * s2 * a) +
                          cplx(0.0, spec.k0 * (x - spec.x0) - 0.5 * hbar * spec.k0 * spec.k0 * v);
    return std::pow(std::numbers::pi * s2, -0.25) / std::sqrt(a) * std::exp(exponent);
}

WaveSample free_gaussian(const GaussianSpec& spec, double v, double t, double hbar,
                         const Grid& grid) {
    if (!(spec.sigma > 0.0)) {
        throw DomainError("free_gaussian: sigma must be positive");
    }
    grid.validate();
    std::vector<cplx> values(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        values[j] = free_gaussian_value(spec, v, hbar, grid.x(j));
    }
    return WaveSample(grid, std::move(values), t, hbar);
}

// ---------------------------------------------------------------------------

void ModeSpec::validate() const {
    if (n < 0 || n > kHermiteMaxOrder) {
        throw RangeError("ModeSpec: mode index must lie in [0, 512]");
    }
    if (!(b > 0.0) || !(hbar > 0.0) || !std::isfinite(p)) {
        throw DomainError("ModeSpec: need b > 0, hbar > 0 and finite p");
    }
}

double ModeSpec::rho(double t) const { return std::hypot(v(t), b); }

GouyParams gouy_from_v(double b, double v, double hbar) {
    // 1/(hbar (b + i v)) = (b - i v) / (hbar rho^2) = 1/gamma^2 - i inv_s / hbar
    const double rho2 = b * b + v * v;
    GouyParams g;
    g.chi = std::atan2(v, b);
    g.gamma = std::sqrt(hbar * rho2 / b);
    g.inv_s = v / rho2;
    return g;
}

GouyParams gouy_parameters(const ModeSpec& spec, double t) {
    spec.validate();
    return gouy_from_v(spec.b, spec.v(t), spec.hbar);
}

cplx hg_mode_value(const ModeSpec& spec, const PathPoint& point, double v, double x) {
    const double b = spec.b;
    const double hbar = spec.hbar;
    const double rho = std::hypot(v, b);
    const double rho_dot = v / (point.mass * rho);
    const double dx = x - point.x;
    const double arg = std::sqrt(b / hbar) * dx / rho;
    // hermite_function carries H_n e^{-X^2/2} / sqrt(2^n n! sqrt(pi)).
    const double envelope = hermite_function(spec.n, arg) * std::pow(b / hbar, 0.25) / std::sqrt(rho);
    const cplx gouy = std::pow(cplx(b / rho, -v / rho), spec.n + 0.5);
    const double chirp = dx * dx / (2.0 * hbar) * point.mass * rho_dot / rho;
    const double gauge = (point.mass * point.xdot * x + point.xi) / hbar;
    return envelope * gouy * std::polar(1.0, chirp + gauge);
}

namespace {

void require_coverage(const ModeSpec& spec, const PathPoint& point, double v, const Grid& grid) {
    const double scale = std::sqrt(spec.b / spec.hbar) / std::hypot(v, spec.b);
    const double lo = (grid.xmin - point.x) * scale;
    const double hi = (grid.xmax - point.x) * scale;
    const double turning = std::sqrt(2.0 * spec.n + 1.0);
    auto fail = [&] {
        throw CoverageError("grid too small for mode n=" + std::to_string(spec.n) +
                            " (tail mass above 1e-10 outside the grid)");
    };
    if (hi < turning || lo > -turning) {
        fail();
    }
    auto density = [&](double s) {
        const double h = hermite_function(spec.n, s);
        return h * h;
    };
    const double reach = turning + 40.0;
    const double tail = integrate(density, hi, std::max(hi, reach), 1e-13) +
                        integrate(density, std::min(lo, -reach), lo, 1e-13);
    if (tail > 1e-10) {
        fail();
    }
}

}  // namespace

WaveSample hg_mode(const ModeSpec& spec, double t, const Grid& grid) {
    spec.validate();
    grid.validate();
    const PathPoint point = spec.path.at(t);
    const double v = spec.v(t);
    require_coverage(spec, point, v, grid);
    std::vector<cplx> values(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        values[j] = hg_mode_value(spec, point, v, grid.x(j));
    }
    return WaveSample(grid, std::move(values), t, spec.hbar);
}

std::vector<std::vector<cplx>> hg_mode_family(const ModeSpec& spec, int n_max, double t,
                                              const Grid& grid) {
    spec.validate();
    grid.validate();
    if (n_max < 0 || n_max > kHermiteMaxOrder) {
        throw RangeError("hg_mode_family: n_max must lie in [0, 512]");
    }
    const PathPoint point = spec.path.at(t);
    const double v = spec.v(t);
    const double b = spec.b;
    const double hbar = spec.hbar;
    const double rho = std::hypot(v, b);
    const cplx gouy_step(b / rho, -v / rho);
    const cplx gouy_half = std::sqrt(gouy_step);
    const double amp = std::pow(b / hbar, 0.25) / std::sqrt(rho);
    std::vector<std::vector<cplx>> family(n_max + 1, std::vector<cplx>(grid.n));
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        const double dx = x - point.x;
        const double arg = std::sqrt(b / hbar) * dx / rho;
        const double chirp = dx * dx * v / (2.0 * hbar * rho * rho);
        const double gauge = (point.mass * point.xdot * x + point.xi) / hbar;
        cplx common = amp * gouy_half * std::polar(1.0, chirp + gauge);
        double prev = 0.0;
        double cur = std::exp(-0.5 * arg * arg) / std::sqrt(std::sqrt(std::numbers::pi));
        for (int n = 0; n <= n_max; ++n) {
            if (n > 0) {
                const double next = std::sqrt(2.0 / n) * arg * cur - std::sqrt((n - 1.0) / n) * prev;
                prev = cur;
                cur = next;
                common *= gouy_step;
            }
            family[n][j] = cur * common;
        }
    }
    return family;
}

WaveSample hg_mode_gouy(const ModeSpec& spec, double t, const Grid& grid) {
    spec.validate();
    grid.validate();
    const PathPoint point = spec.path.at(t);
    const double v = spec.v(t);
    require_coverage(spec, point, v, grid);
    const GouyParams g = gouy_from_v(spec.b, v, spec.hbar);
    const int n = spec.n;
    const double hbar = spec.hbar;
    // log of 1 / sqrt(2^n n! sqrt(pi) gamma)
    const double log_norm = -0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0) +
                                    0.5 * std::log(std::numbers::pi) + std::log(g.gamma));
    std::vector<cplx> values(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double x = grid.x(j);
        const double dx = x - point.x;
        const double u = dx / g.gamma;
        const ScaledValue h = hermite_scaled(n, u);
        double magnitude = 0.0;
        if (h.mantissa != 0.0) {
            const double log_mag = std::log(std::abs(h.mantissa)) + h.exponent * std::numbers::ln2 +
                                   log_norm - 0.5 * u * u;
            magnitude = std::copysign(std::exp(log_mag), h.mantissa);
        }
        const double phase = (point.mass * point.xdot * x + point.xi + 0.5 * dx * dx * g.inv_s) / hbar -
                             (n + 0.5) * g.chi;
        values[j] = std::polar(1.0, phase) * magnitude;
    }
    return WaveSample(grid, std::move(values), t, hbar);
}

}  // namespace linpot
