#include "linpot/verification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linpot/classical.hpp"
#include "linpot/errors.hpp"
#include "linpot/spectral.hpp"
#include "linpot/unitary.hpp"

namespace linpot {

namespace {

double window_norm(std::span<const cplx> v, const Grid& grid, const Window& w) {
    double sum = 0.0;
    for (std::size_t j = w.first; j < w.last; ++j) {
        const double weight = (j == w.first || j + 1 == w.last) ? 0.5 : 1.0;
        sum += weight * std::norm(v[j]);
    }
    return std::sqrt(sum * grid.dx());
}

struct HamiltonianParts {
    std::vector<cplx> kinetic;
    std::vector<cplx> potential;
};

HamiltonianParts hamiltonian_parts(const WaveSample& psi, double mass, double force,
                                   double window) {
    const Grid& grid = psi.grid();
    const auto taper = spectral::plateau_taper(grid, window);
    std::vector<cplx> tapered(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        tapered[j] = taper[j] * psi[j];
    }
    auto kinetic = spectral::second_derivative(tapered, grid);
    const double hbar = psi.hbar();
    std::vector<cplx> potential(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        kinetic[j] *= -hbar * hbar / (2.0 * mass);
        potential[j] = -grid.x(j) * force * psi[j];
    }
    return {std::move(kinetic), std::move(potential)};
}

double finite_ratio(double num, double den, const char* what) {
    const double r = num / den;
    if (!std::isfinite(r)) {
        throw EvaluationError(std::string(what) + ": residual is not finite");
    }
    return r;
}

}  // namespace

double schrodinger_residual(const StateFn& state_fn, const ProfilePair& params, double t,
                            double dt_probe, double window) {
    if (!(dt_probe >= 1e-6 && dt_probe <= 1e-3)) {
        throw DomainError("schrodinger_residual: dt_probe must lie in [1e-6, 1e-3]");
    }
    const WaveSample psi = state_fn(t);
    const WaveSample m2 = state_fn(t - 2.0 * dt_probe);
    const WaveSample m1 = state_fn(t - dt_probe);
    const WaveSample p1 = state_fn(t + dt_probe);
    const WaveSample p2 = state_fn(t + 2.0 * dt_probe);
    const Grid& grid = psi.grid();
    for (const auto* s : {&m2, &m1, &p1, &p2}) {
        if (!(s->grid() == grid)) {
            throw ShapeError("schrodinger_residual: state_fn changed the grid");
        }
    }
    const double hbar = psi.hbar();
    const auto parts = hamiltonian_parts(psi, params.mass(t), params.force(t), window);
    std::vector<cplx> lhs(grid.n);
    std::vector<cplx> h_psi(grid.n);
    std::vector<cplx> diff(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const cplx dpsi = (-p2[j] + 8.0 * p1[j] - 8.0 * m1[j] + m2[j]) / (12.0 * dt_probe);
        lhs[j] = cplx(0.0, hbar) * dpsi;
        h_psi[j] = parts.kinetic[j] + parts.potential[j];
        diff[j] = lhs[j] - h_psi[j];
    }
    const Window w = central_window(grid, window);
    return finite_ratio(window_norm(diff, grid, w),
                        window_norm(h_psi, grid, w) + window_norm(lhs, grid, w),
                        "schrodinger_residual");
}

double eigen_residual(const WaveSample& phi, double mass, double force, double energy,
                      double window) {
    if (!(mass > 0.0)) {
        throw DomainError("eigen_residual: mass must be positive");
    }
    const Grid& grid = phi.grid();
    const auto parts = hamiltonian_parts(phi, mass, force, window);
    std::vector<cplx> diff(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        diff[j] = parts.kinetic[j] + parts.potential[j] - energy * phi[j];
    }
    const Window w = central_window(grid, window);
    const double scale = window_norm(parts.kinetic, grid, w) + window_norm(parts.potential, grid, w) +
                         std::abs(energy) * window_norm(phi.values(), grid, w);
    return finite_ratio(window_norm(diff, grid, w), scale, "eigen_residual");
}

std::vector<double> coincidence_limit_check(const ProfilePair& params, double t_a,
                                            std::span<const double> epsilons,
                                            const std::function<cplx(double)>& g,
                                            const CoincidenceSetup& setup) {
    if (epsilons.empty()) {
        throw DomainError("coincidence_limit_check: no epsilons");
    }
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0) || (i > 0 && !(epsilons[i] < epsilons[i - 1]))) {
            throw DomainError("coincidence_limit_check: epsilons must be positive and decreasing");
        }
    }
    ProfileIntegrals integrals(params, t_a + epsilons.front());
    std::vector<double> out;
    out.reserve(epsilons.size());
    for (const double eps : epsilons) {
        const auto values = apply_kernel(integrals, t_a, t_a + eps, setup.hbar, g, setup.support_lo,
                                         setup.support_hi, setup.probes, setup.quad);
        double worst = 0.0;
        for (std::size_t k = 0; k < values.size(); ++k) {
            worst = std::max(worst, std::abs(values[k] - g(setup.probes[k])));
        }
        out.push_back(worst);
    }
    return out;
}

double shape_invariance_metric(const WaveSample& psi_t, const WaveSample& psi_0, double shift,
                               double window) {
    const Grid& grid = psi_t.grid();
    if (!(psi_0.grid() == grid)) {
        throw ShapeError("shape_invariance_metric: samples live on different grids");
    }
    const double cells = shift / grid.dx();
    const double rounded = std::round(cells);
    if (!std::isfinite(cells) || std::abs(cells - rounded) > 1e-9 * std::max(1.0, std::abs(cells))) {
        throw CommensurabilityError("shape_invariance_metric: shift " + std::to_string(shift) +
                                    " is not a whole number of grid cells");
    }
    const auto s = static_cast<long long>(rounded);
    const Window w = central_window(grid, window);
    const long long lo = static_cast<long long>(w.first) - s;
    const long long hi = static_cast<long long>(w.last) - 1 - s;
    if (lo < 0 || hi >= static_cast<long long>(grid.n)) {
        throw WindowError("shape_invariance_metric: shifted window leaves the grid");
    }
    double worst = 0.0;
    for (std::size_t j = w.first; j < w.last; ++j) {
        const auto src = static_cast<std::size_t>(static_cast<long long>(j) - s);
        worst = std::max(worst, std::abs(std::abs(psi_t[j]) - std::abs(psi_0[src])));
    }
    return worst;
}

double unitary_equivalence_check(const ProfilePair& params, const StateFn& psi_free_fn, double t,
                                 const UnitaryCheckOptions& options) {
    const ClassicalPath path(params, options.c, options.d);
    auto transformed = [&](double s) {
        UnitaryData u = UnitaryData::from_path(path, s, options.hbar);
        u.xi *= options.xi_sign;
        return apply_unitary(u, psi_free_fn(s));
    };
    return schrodinger_residual(transformed, params, t, options.dt_probe);
}

void to_json(nlohmann::json& j, const CertificateReport& r) {
    j = nlohmann::json{{"criterion", r.criterion}, {"name", r.name},       {"residual", r.residual},
                       {"tolerance", r.tolerance}, {"bound", r.bound},     {"pass", r.pass},
                       {"config", r.config}};
    if (!r.error.empty()) {
        j["error"] = r.error;
    }
}

}  // namespace linpot
