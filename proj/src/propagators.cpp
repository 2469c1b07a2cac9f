#include "linpot/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "linpot/errors.hpp"
#include "linpot/oracle.hpp"
#include "linpot/spectral.hpp"
#include "linpot/special_functions.hpp"

namespace linpot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_hbar(double hbar) {
    if (!(hbar > 0.0)) {
        throw DomainError("kernel: hbar must be positive");
    }
}

// (2 pi i hbar J)^{-1/2}, principal branch.
cplx free_prefactor(double hbar, double j) {
    return 1.0 / std::sqrt(cplx(0.0, kTwoPi * hbar * j));
}

}  // namespace

void KernelQuery::validate() const {
    if (!(t_b > t_a)) {
        throw OrderingError("kernel: need t_b > t_a (got t_a=" + std::to_string(t_a) +
                            ", t_b=" + std::to_string(t_b) + ")");
    }
    if (!std::isfinite(x_a) || !std::isfinite(x_b)) {
        throw DomainError("kernel: positions must be finite");
    }
}

cplx linear_kernel(const ProfileIntegrals& integrals, const KernelQuery& q, double hbar) {
    q.validate();
    require_hbar(hbar);
    const auto d = integrals.between(q.t_a, q.t_b);
    const double s = q.x_a - q.x_b + d.drift;
    const double phase = (s * s / d.inv_mass + 2.0 * q.x_b * d.impulse - d.energy) / (2.0 * hbar);
    return free_prefactor(hbar, d.inv_mass) * std::polar(1.0, phase);
}

cplx linear_kernel(const ProfilePair& params, const KernelQuery& q, double hbar) {
    q.validate();
    return linear_kernel(ProfileIntegrals(params, q.t_b), q, hbar);
}

// ---------------------------------------------------------------------------

void OscillatorClassicalData::validate() const {
    if (!u_c || !u_c_dot || !v_s || !v_s_dot || !x_ph || !x_ph_dot) {
        throw DomainError("OscillatorClassicalData: all classical solutions must be set");
    }
    const double tol = 1e-10;
    if (std::abs(u_c(t_a) - 1.0) > tol || std::abs(v_s(t_a)) > tol ||
        std::abs(x_ph(t_a)) > tol || std::abs(x_ph_dot(t_a)) > tol) {
        throw DomainError("OscillatorClassicalData: solutions are not normalized at t_a");
    }
}

OscillatorClassicalData OscillatorClassicalData::free_linear(
    std::shared_ptr<const ProfileIntegrals> integrals, double t_a) {
    OscillatorClassicalData d;
    d.t_a = t_a;
    d.mass = integrals->params().mass;
    d.w = ParameterProfile::constant(0.0, d.mass.t_max());
    d.u_c = [](double) { return 1.0; };
    d.u_c_dot = [](double) { return 0.0; };
    d.v_s = [integrals, t_a](double t) { return integrals->between(t_a, t).inv_mass; };
    d.v_s_dot = [integrals](double t) { return 1.0 / integrals->mass(t); };
    d.x_ph = [integrals, t_a](double t) { return integrals->between(t_a, t).drift; };
    d.x_ph_dot = [integrals, t_a](double t) {
        return integrals->between(t_a, t).impulse / integrals->mass(t);
    };
    return d;
}

cplx oscillator_kernel(const OscillatorClassicalData& data, const KernelQuery& q, double hbar) {
    q.validate();
    require_hbar(hbar);
    if (std::abs(q.t_a - data.t_a) > 1e-12) {
        throw DomainError("oscillator_kernel: query t_a differs from the data normalization time");
    }
    data.validate();
    const double ta = q.t_a;
    const double tb = q.t_b;
    const double vs_b = data.v_s(tb);
    const double vsd_a = data.v_s_dot(ta);
    const double vsd_b = data.v_s_dot(tb);
    const double m_a = data.mass(ta);
    const double m_b = data.mass(tb);
    if (!(std::abs(vs_b) > 1e-13 * std::max(1.0, std::abs(vsd_a) * (tb - ta)))) {
        throw CausticError("oscillator_kernel: v_s(t_b) vanishes (caustic)");
    }
    const double ratio = m_a * vsd_a / vs_b;
    const cplx pref = std::sqrt(cplx(0.0, -ratio / (kTwoPi * hbar)));

    const double xb_rel = q.x_b - data.x_ph(tb);
    auto lagrangian = [&](double t) {
        const double m = data.mass(t);
        const double w = data.w(t);
        const double x = data.x_ph(t);
        const double xd = data.x_ph_dot(t);
        return m * w * w * x * x - m * xd * xd;
    };
    const double action = integrate(lagrangian, ta, tb, 1e-13);
    const double bracket = q.x_a * q.x_a * m_a * (-data.u_c_dot(ta) + data.u_c(tb) * vsd_a / vs_b) +
                           xb_rel * xb_rel * m_b * vsd_b / vs_b -
                           2.0 * q.x_a * xb_rel * m_a * vsd_a / vs_b +
                           2.0 * m_b * data.x_ph_dot(tb) * q.x_b + action;
    return pref * std::polar(1.0, bracket / (2.0 * hbar));
}

// ---------------------------------------------------------------------------

namespace {

struct Nodes {
    std::vector<double> y;
    std::vector<double> w;
};

Nodes panel_nodes(double lo, double hi, double k_max, const KernelQuadrature& quad) {
    if (quad.nodes_per_panel < 2 || !(quad.panel_fraction > 0.0)) {
        throw DomainError("KernelQuadrature: invalid settings");
    }
    const double width = quad.panel_fraction * kTwoPi / std::max(k_max, 1e-300);
    const double panels = std::max(1.0, std::ceil((hi - lo) / width));
    const double total = panels * quad.nodes_per_panel;
    if (!(total <= static_cast<double>(quad.max_nodes))) {
        throw ResolutionError("apply_kernel: kernel needs " + std::to_string(total) +
                              " quadrature nodes, above the cap");
    }
    const auto& rule = gauss_legendre(quad.nodes_per_panel);
    const auto np = static_cast<std::size_t>(panels);
    const double h = (hi - lo) / static_cast<double>(np);
    Nodes out;
    out.y.reserve(np * rule.nodes.size());
    out.w.reserve(np * rule.nodes.size());
    for (std::size_t p = 0; p < np; ++p) {
        const double mid = lo + (p + 0.5) * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            out.y.push_back(mid + 0.5 * h * rule.nodes[i]);
            out.w.push_back(0.5 * h * rule.weights[i]);
        }
    }
    return out;
}

double max_kernel_wavenumber(double lo, double hi, double x_ph, std::span<const double> xs,
                             double hbar, double j) {
    const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
    const double reach = std::max(std::abs(*xmax - (lo + x_ph)), std::abs(*xmin - (hi + x_ph)));
    return reach / (hbar * std::abs(j));
}

bool uniform(std::span<const double> xs, double& x0, double& step) {
    if (xs.size() < 2) {
        return false;
    }
    x0 = xs[0];
    step = (xs.back() - xs[0]) / static_cast<double>(xs.size() - 1);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (std::abs(xs[k] - (x0 + k * step)) > 1e-9 * std::max(1.0, std::abs(xs[k]))) {
            return false;
        }
    }
    return true;
}

// int K g over the nodes, given g sampled at the nodes.
std::vector<cplx> kernel_sum(const ProfileIntegrals::Values& d, double hbar, const Nodes& nodes,
                             std::span<const cplx> g_nodes, std::span<const double> xs) {
    const double j = d.inv_mass;
    const double scale = 1.0 / (hbar * j);
    std::vector<cplx> weighted(nodes.y.size());
    std::vector<double> ys(nodes.y.size());
    for (std::size_t i = 0; i < nodes.y.size(); ++i) {
        const double y = nodes.y[i] + d.drift;
        ys[i] = y;
        weighted[i] = nodes.w[i] * g_nodes[i] * std::polar(1.0, 0.5 * y * y * scale);
    }
    std::vector<cplx> acc(xs.size(), cplx(0.0));
    double x0 = 0.0;
    double step = 0.0;
    if (uniform(xs, x0, step)) {
        constexpr std::size_t kResync = 64;
        for (std::size_t i = 0; i < ys.size(); ++i) {
            const cplx rot = std::polar(1.0, -step * ys[i] * scale);
            cplx cur;
            for (std::size_t k = 0; k < xs.size(); ++k) {
                if (k % kResync == 0) {
                    cur = weighted[i] * std::polar(1.0, -(x0 + k * step) * ys[i] * scale);
                }
                acc[k] += cur;
                cur *= rot;
            }
        }
    } else {
        for (std::size_t k = 0; k < xs.size(); ++k) {
            for (std::size_t i = 0; i < ys.size(); ++i) {
                acc[k] += weighted[i] * std::polar(1.0, -xs[k] * ys[i] * scale);
            }
        }
    }
    const cplx pref = free_prefactor(hbar, j);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double x = xs[k];
        const double phase = (x * x / j + 2.0 * x * d.impulse - d.energy) / (2.0 * hbar);
        acc[k] *= pref * std::polar(1.0, phase);
    }
    return acc;
}

}  // namespace

std::vector<cplx> apply_kernel(const ProfileIntegrals& integrals, double t_a, double t_b,
                               double hbar, const std::function<cplx(double)>& g,
                               double support_lo, double support_hi, std::span<const double> xs,
                               const KernelQuadrature& quad) {
    KernelQuery{t_a, 0.0, t_b, 0.0}.validate();
    require_hbar(hbar);
    if (!(support_hi > support_lo)) {
        throw DomainError("apply_kernel: empty support interval");
    }
    if (xs.empty()) {
        return {};
    }
    const auto d = integrals.between(t_a, t_b);
    const double k_max = max_kernel_wavenumber(support_lo, support_hi, d.drift, xs, hbar, d.inv_mass);
    const Nodes nodes = panel_nodes(support_lo, support_hi, k_max, quad);
    std::vector<cplx> g_nodes(nodes.y.size());
    for (std::size_t i = 0; i < nodes.y.size(); ++i) {
        g_nodes[i] = g(nodes.y[i]);
    }
    return kernel_sum(d, hbar, nodes, g_nodes, xs);
}

WaveSample propagate_with_kernel(const ProfileIntegrals& integrals, const WaveSample& psi_a,
                                 double t_b, const KernelQuadrature& quad) {
    const double t_a = psi_a.t();
    KernelQuery{t_a, 0.0, t_b, 0.0}.validate();
    const Grid& grid = psi_a.grid();
    const double hbar = psi_a.hbar();
    const auto d = integrals.between(t_a, t_b);

    // Support of psi_a.
    double peak = 0.0;
    for (const auto& v : psi_a.values()) {
        peak = std::max(peak, std::abs(v));
    }
    if (!(peak > 0.0)) {
        return psi_a.with_values(std::vector<cplx>(grid.n, cplx(0.0))).with_time(t_b);
    }
    std::size_t first = grid.n;
    std::size_t last = 0;
    for (std::size_t j = 0; j < grid.n; ++j) {
        if (std::abs(psi_a[j]) > 1e-14 * peak) {
            first = std::min(first, j);
            last = j;
        }
    }
    const double lo = std::max(grid.xmin, grid.x(first) - 2.0 * grid.dx());
    const double hi = std::min(grid.xmax, grid.x(last) + 2.0 * grid.dx());

    // Resolution of the propagated state on the output grid.
    const double centre = mean_position(psi_a);
    auto local_k = [&](double x) {
        return std::abs((x - centre - d.drift) / d.inv_mass + d.impulse) / hbar;
    };
    const double k_edge = std::max(local_k(grid.xmin), local_k(grid.xmax));
    if (k_edge > 0.0 && kTwoPi / k_edge < 8.0 * grid.dx()) {
        throw ResolutionError("propagate_with_kernel: fewer than 8 grid points per kernel "
                              "wavelength at the grid edge; refine the grid or shorten t_b - t_a");
    }

    // Occupied bandwidth of psi_a adds to the kernel wavenumber.
    const auto spec = spectral::forward(psi_a.values());
    const auto ks = spectral::wavenumbers(grid);
    double total = 0.0;
    for (const auto& c : spec) {
        total += std::norm(c);
    }
    double k_g = 0.0;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        if (std::norm(spec[j]) > 1e-14 * total) {
            k_g = std::max(k_g, std::abs(ks[j]));
        }
    }

    const auto xs = grid.points();
    const double k_max = max_kernel_wavenumber(lo, hi, d.drift, xs, hbar, d.inv_mass) + k_g;
    const Nodes nodes = panel_nodes(lo, hi, k_max, quad);
    const auto g_nodes = spectral::interpolate(psi_a.values(), grid, nodes.y);
    auto out = kernel_sum(d, hbar, nodes, g_nodes, xs);
    return WaveSample(grid, std::move(out), t_b, hbar);
}

double kernel_equation_residual(const ProfileIntegrals& integrals, const KernelQuery& q,
                                double hbar, double step_t, double step_x) {
    q.validate();
    require_hbar(hbar);
    if (!(step_t > 0.0) || !(step_x > 0.0) || q.t_b - 2.0 * step_t <= q.t_a) {
        throw DomainError("kernel_equation_residual: steps must be positive and keep t_b > t_a");
    }
    auto k_at = [&](double tb, double xb) {
        return linear_kernel(integrals, KernelQuery{q.t_a, q.x_a, tb, xb}, hbar);
    };
    const double ht = step_t;
    const double hx = step_x;
    const cplx k_t = (-k_at(q.t_b + 2 * ht, q.x_b) + 8.0 * k_at(q.t_b + ht, q.x_b) -
                      8.0 * k_at(q.t_b - ht, q.x_b) + k_at(q.t_b - 2 * ht, q.x_b)) /
                     (12.0 * ht);
    const cplx k0 = k_at(q.t_b, q.x_b);
    const cplx k_xx = (-k_at(q.t_b, q.x_b + 2 * hx) + 16.0 * k_at(q.t_b, q.x_b + hx) - 30.0 * k0 +
                       16.0 * k_at(q.t_b, q.x_b - hx) - k_at(q.t_b, q.x_b - 2 * hx)) /
                      (12.0 * hx * hx);
    const double m = integrals.mass(q.t_b);
    const double f = integrals.force(q.t_b);
    const cplx lhs = cplx(0.0, hbar) * k_t;
    const cplx kinetic = -hbar * hbar / (2.0 * m) * k_xx;
    const cplx potential = -q.x_b * f * k0;
    const double scale = std::abs(lhs) + std::abs(kinetic) + std::abs(potential);
    return std::abs(lhs - kinetic - potential) / scale;
}

// ---------------------------------------------------------------------------

cplx mehler_z_from_v(double b, double v_a, double v_b) {
    if (!(b > 0.0)) {
        throw DomainError("mehler_z: b must be positive");
    }
    return std::sqrt(cplx(b, -v_b) / cplx(b, v_b)) * std::sqrt(cplx(b, v_a) / cplx(b, -v_a));
}

cplx mehler_z(double b, double p, double t_a, double t_b) {
    return mehler_z_from_v(b, t_a + p, t_b + p);
}

MehlerComparison mehler_identity(cplx z, double x, double y, int n_max) {
    if (n_max < 0 || n_max > kHermiteMaxOrder) {
        throw RangeError("mehler_identity: N must lie in [0, 512]");
    }
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("mehler_identity: need |z| < 1");
    }
    MehlerComparison out;
    out.convergence_warning = std::abs(z) > 0.95;
    const cplx root = std::sqrt(z);
    cplx power = root;
    cplx sum = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        sum += power * hermite_normalized(n, x) * hermite_normalized(n, y);
        power *= z;
    }
    out.partial_sum = sum;
    const cplx one_minus = 1.0 - z * z;
    out.closed_form = root / std::sqrt(one_minus) *
                      std::exp(-z * z / one_minus * (x * x + y * y) + 2.0 * z / one_minus * x * y);
    return out;
}

double completeness_residual(const ModeSpec& family, int n_max, double t_a, double t_b,
                             const WaveSample& g, const KernelQuadrature& quad) {
    KernelQuery{t_a, 0.0, t_b, 0.0}.validate();
    family.validate();
    if (std::abs(g.hbar() - family.hbar) > 1e-15 * family.hbar) {
        throw ShapeError("completeness_residual: hbar of g and the mode family differ");
    }
    const Grid& grid = g.grid();
    const auto modes_a = hg_mode_family(family, n_max, t_a, grid);
    const auto modes_b = hg_mode_family(family, n_max, t_b, grid);
    std::vector<cplx> expansion(grid.n, cplx(0.0));
    for (int n = 0; n <= n_max; ++n) {
        cplx c = 0.0;
        for (std::size_t j = 0; j < grid.n; ++j) {
            c += std::conj(modes_a[n][j]) * g[j];
        }
        c *= grid.dx();
        for (std::size_t j = 0; j < grid.n; ++j) {
            expansion[j] += c * modes_b[n][j];
        }
    }
    const WaveSample kernel_side =
        propagate_with_kernel(*family.path.integrals(), g.with_time(t_a), t_b, quad);
    const WaveSample mode_side(grid, std::move(expansion), t_b, g.hbar());
    return l2_distance(kernel_side, mode_side, 0.8);
}

}  // namespace linpot
