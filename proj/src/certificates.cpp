#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <tuple>

#include "linpot/analytic_states.hpp"
#include "linpot/classical.hpp"
#include "linpot/errors.hpp"
#include "linpot/oracle.hpp"
#include "linpot/propagators.hpp"
#include "linpot/unitary.hpp"
#include "linpot/verification.hpp"

namespace linpot {

namespace {

using nlohmann::json;
using Reports = std::vector<CertificateReport>;

const double kCbrt2 = std::cbrt(2.0);

ProfilePair profiles(ParameterProfile mass, ParameterProfile force) {
    return ProfilePair{std::move(mass), std::move(force)};
}

json grid_json(const Grid& g) { return json{{"xmin", g.xmin}, {"xmax", g.xmax}, {"n", g.n}}; }

void add(Reports& out, int criterion, std::string name, double residual, double tolerance,
         json config, bool lower_bound = false) {
    CertificateReport r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.residual = residual;
    r.tolerance = tolerance;
    r.bound = lower_bound ? "min" : "max";
    r.pass = lower_bound ? residual >= tolerance : residual <= tolerance;
    r.config = std::move(config);
    out.push_back(std::move(r));
}

double window_sup(const WaveSample& a, const WaveSample& b, double fraction = 0.8) {
    const Window w = central_window(a.grid(), fraction);
    double worst = 0.0;
    for (std::size_t j = w.first; j < w.last; ++j) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

// --- 1 ---------------------------------------------------------------------

void unitary_equivalence(Reports& out) {
    const Grid grid{-20.0, 20.0, 1024};
    const double hbar = 1.0;
    const double t = 1.0;
    const auto mass = ParameterProfile::constant(1.0);
    const GaussianSpec gauss{0.0, 0.5, 1.0};
    const ModeSpec hg3{3, 1.0, 0.0, ClassicalPath(ProfilePair{}, 0.0, 0.0), hbar};

    const std::vector<std::pair<std::string, StateFn>> inputs{
        {"gaussian", [&](double s) { return free_gaussian(gauss, s, s, hbar, grid); }},
        {"hg3", [&](double s) { return hg_mode(hg3, s, grid); }},
        {"superposition",
         [&](double s) {
             const auto a = free_gaussian(gauss, s, s, hbar, grid);
             const auto b = hg_mode(hg3, s, grid);
             std::vector<cplx> v(grid.n);
             for (std::size_t j = 0; j < grid.n; ++j) {
                 v[j] = 0.6 * a[j] + cplx(0.0, 0.8) * b[j];
             }
             return a.with_values(std::move(v));
         }},
    };
    const std::vector<std::pair<std::string, ParameterProfile>> forces{
        {"constant", ParameterProfile::constant(1.0)},
        {"linear", ParameterProfile::polynomial({0.0, 0.5})},
        {"sinusoidal", ParameterProfile::sinusoidal(0.0, 1.0, 1.0, 0.0)},
    };
    UnitaryCheckOptions opts;
    opts.c = 0.2;
    opts.d = 0.1;
    opts.hbar = hbar;
    for (const auto& [fname, force] : forces) {
        for (const auto& [sname, fn] : inputs) {
            const double r = unitary_equivalence_check(profiles(mass, force), fn, t, opts);
            add(out, 1, "unitary equivalence " + sname + " / " + fname + " force", r, 1e-5,
                json{{"state", sname}, {"force", force.to_json()}, {"t", t}, {"c", opts.c},
                     {"d", opts.d}, {"grid", grid_json(grid)}});
        }
    }
    UnitaryCheckOptions neg = opts;
    neg.xi_sign = -1.0;
    const double r = unitary_equivalence_check(profiles(mass, forces[0].second), inputs[0].second, t, neg);
    add(out, 1, "negative control: flipped xi sign must fail", r, 1e-5,
        json{{"state", "gaussian"}, {"force", "constant"}, {"xi_sign", -1}}, true);
}

// --- 2 ---------------------------------------------------------------------

void airy_stationarity(Reports& out) {
    const Grid grid{-32.0, 32.0, 4096};
    for (const double e : {0.0, 1.0, -2.0}) {
        const AirySpec spec{1.0, 1.0, e, 0.0, 1.0};
        const auto phi = airy_stationary(spec, 0.0, grid);
        const double r = eigen_residual(phi, spec.m, spec.force(), spec.energy());
        add(out, 2, "Airy eigen-residual e=" + std::to_string(static_cast<int>(e)), r, 1e-6,
            json{{"beta", spec.beta}, {"m", spec.m}, {"e", e}, {"grid", grid_json(grid)}});
    }
}

// --- 3 ---------------------------------------------------------------------

void shape_invariance(Reports& out) {
    const Grid grid{-32.0, 32.0, 4096};
    const AirySpec spec{kCbrt2, 1.0, 0.0, 0.0, 1.0};
    const auto psi0 = airy_free_packet(spec, 0.0, grid);
    const double b3 = spec.beta * spec.beta * spec.beta;
    for (const double t : {0.5, 1.0, 2.0}) {
        const double shift = -b3 * t * t / (4.0 * spec.m * spec.m) - spec.c * t;
        const double r = shape_invariance_metric(airy_free_packet(spec, t, grid), psi0, shift);
        add(out, 3, "Airy shape invariance t=" + std::to_string(t), r, 1e-10,
            json{{"beta3", b3}, {"t", t}, {"shift", shift}, {"grid", grid_json(grid)}});
    }
    const GaussianSpec gauss{0.0, 0.0, 1.0};
    const double r = shape_invariance_metric(free_gaussian(gauss, 2.0, 2.0, 1.0, grid),
                                             free_gaussian(gauss, 0.0, 0.0, 1.0, grid), 0.0);
    add(out, 3, "negative control: spreading Gaussian", r, 1e-2,
        json{{"sigma", 1.0}, {"t", 2.0}, {"shift", 0.0}}, true);
}

// --- 4 ---------------------------------------------------------------------

void construction_equivalence(Reports& out) {
    const Grid grid{-32.0, 32.0, 4096};
    double worst = 0.0;
    for (const double e : {0.0, 1.0}) {
        for (const double c : {0.0, 0.5}) {
            const AirySpec spec{kCbrt2, 1.0, e, c, 1.0};
            const ClassicalPath path(profiles(ParameterProfile::constant(spec.m),
                                              ParameterProfile::constant(spec.force())),
                                     c, 0.0);
            for (const double t : {0.5, 1.0, 2.0}) {
                // psi^f carries the constant phase exp(-i m c e / hbar)
                auto evolved = airy_stationary(spec, t, grid);
                const cplx offset = std::polar(1.0, -spec.m * c * e / spec.hbar);
                std::vector<cplx> v(evolved.values().begin(), evolved.values().end());
                for (auto& a : v) {
                    a *= offset;
                }
                evolved = evolved.with_values(std::move(v));
                const auto lhs = apply_unitary_inverse(UnitaryData::from_path(path, t, spec.hbar), evolved);
                worst = std::max(worst, window_sup(lhs, airy_free_packet(spec, t, grid)));
            }
        }
    }
    add(out, 4, "U^dagger(stationary) equals the free Airy packet", worst, 1e-8,
        json{{"beta3", 2.0}, {"e", {0, 1}}, {"c", {0, 0.5}}, {"t", {0.5, 1, 2}}, {"grid", grid_json(grid)}});
}

// --- 5 ---------------------------------------------------------------------

void varying_mass(Reports& out) {
    const Grid grid{-32.0, 32.0, 4096};
    const double f = 0.5;
    const auto params = profiles(ParameterProfile::polynomial({1.0, 1.0}), ParameterProfile::constant(f));
    const AirySpec spec{1.0, 1.0, 0.0, 0.0, 1.0};
    const ClassicalPath path(params, 0.0, 0.0);
    double worst = 0.0;
    for (const double t : {0.5, 1.0}) {
        auto fn = [&](double s) { return airy_general_packet(spec, path, s, grid); };
        worst = std::max(worst, schrodinger_residual(fn, params, t));
    }
    add(out, 5, "varying-mass Airy packet Schroedinger residual", worst, 1e-5,
        json{{"mass", params.mass.to_json()}, {"force", f}, {"t", {0.5, 1}}, {"grid", grid_json(grid)}});

    double arg_err = 0.0;
    const double b3 = spec.beta * spec.beta * spec.beta;
    for (const double t : {0.5, 1.0, 2.0}) {
        const double tau = std::log1p(t);
        const double xf = b3 * tau * tau / (4.0 * spec.m * spec.m) + spec.c * tau;
        const double xp = f * (t - std::log1p(t));
        for (const double x : {-3.0, 0.0, 2.5}) {
            const double ref = -spec.kappa() * (x - xp + xf + spec.e);
            arg_err = std::max(arg_err, std::abs(airy_general_argument(spec, path, t, x) - ref));
        }
    }
    add(out, 5, "Airy argument matches tau = ln(1+t)", arg_err, 1e-8,
        json{{"t", {0.5, 1, 2}}, {"x", {-3, 0, 2.5}}});
}

// --- 6 ---------------------------------------------------------------------

void kernel_correctness(Reports& out) {
    {
        const auto params = profiles(ParameterProfile::polynomial({1.0, 0.5}),
                                     ParameterProfile::sinusoidal(0.5, 1.0, 1.3, 0.2));
        ProfileIntegrals ints(params, 3.0);
        double worst = 0.0;
        for (const double tb : {0.6, 1.2, 2.0}) {
            for (const double xb : {-1.0, 0.0, 1.5}) {
                worst = std::max(worst, kernel_equation_residual(ints, {0.1, 0.3, tb, xb}, 1.0));
            }
        }
        add(out, 6, "kernel Schroedinger equation (finite differences)", worst, 1e-6,
            json{{"mass", params.mass.to_json()}, {"force", params.force.to_json()}, {"t_a", 0.1},
                 {"x_a", 0.3}, {"t_b", {0.6, 1.2, 2.0}}, {"x_b", {-1.0, 0.0, 1.5}}});
    }
    {
        const auto params = profiles(ParameterProfile::constant(1.0), ParameterProfile::constant(0.5));
        const std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};
        CoincidenceSetup setup;
        setup.support_lo = -10.0;
        setup.support_hi = 10.0;
        auto g = [](double y) { return cplx(std::exp(-0.5 * y * y), 0.0); };
        const auto dev = coincidence_limit_check(params, 0.0, eps, g, setup);
        double increases = 0.0;
        for (std::size_t i = 1; i < dev.size(); ++i) {
            if (!(dev[i] < dev[i - 1])) {
                increases += 1.0;
            }
        }
        add(out, 6, "coincidence limit: deviations decrease", increases, 0.0,
            json{{"epsilons", eps}, {"deviations", dev}});
    }
    {
        const Grid grid{-24.0, 24.0, 4096};
        const auto params = profiles(ParameterProfile::constant(1.0), ParameterProfile::constant(1.0));
        const auto psi0 = free_gaussian(GaussianSpec{0.0, 0.0, 1.0}, 0.0, 0.0, 1.0, grid);
        ProfileIntegrals ints(params, 1.0);
        const auto by_kernel = propagate_with_kernel(ints, psi0, 0.5);
        const auto by_ssf = ssf_propagate(params, psi0, 0.5);
        add(out, 6, "kernel propagation matches split-step (F=1, T=0.5)",
            l2_distance(by_kernel, by_ssf, 0.8), 1e-6,
            json{{"sigma", 1.0}, {"force", 1.0}, {"T", 0.5}, {"dt", 1e-3}, {"grid", grid_json(grid)}});
    }
}

// --- 7 ---------------------------------------------------------------------

void oscillator_reduction(Reports& out) {
    const auto params = profiles(ParameterProfile::polynomial({1.0, 0.5}),
                                 ParameterProfile::sinusoidal(0.0, 1.0, 1.0, 0.0));
    auto ints = std::make_shared<const ProfileIntegrals>(params, 3.0);
    const double ta = 0.3;
    const double tb = 1.7;
    const auto data = OscillatorClassicalData::free_linear(ints, ta);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const KernelQuery q{ta, -2.0 + i, tb, -2.0 + j};
            worst = std::max(worst, std::abs(oscillator_kernel(data, q, 1.0) - linear_kernel(*ints, q, 1.0)));
        }
    }
    add(out, 7, "w=0 oscillator kernel equals the linear kernel (5x5)", worst, 1e-10,
        json{{"mass", params.mass.to_json()}, {"force", params.force.to_json()}, {"t_a", ta}, {"t_b", tb}});
}

// --- 8 ---------------------------------------------------------------------

void mode_family(Reports& out) {
    const Grid grid{-20.0, 20.0, 2048};
    const double t = 0.7;
    const auto params = profiles(ParameterProfile::constant(1.0), ParameterProfile::constant(1.0));
    const ClassicalPath path(params, 0.2, 0.0);
    std::vector<WaveSample> modes;
    double gouy_err = 0.0;
    for (int n = 0; n <= 10; ++n) {
        const ModeSpec spec{n, 1.0, 0.3, path, 1.0};
        modes.push_back(hg_mode(spec, t, grid));
        gouy_err = std::max(gouy_err, window_sup(modes.back(), hg_mode_gouy(spec, t, grid), 1.0));
    }
    double norm_err = 0.0;
    double ortho_err = 0.0;
    for (std::size_t a = 0; a < modes.size(); ++a) {
        for (std::size_t b = a; b < modes.size(); ++b) {
            const cplx o = overlap(modes[a], modes[b]);
            if (a == b) {
                norm_err = std::max(norm_err, std::abs(o - 1.0));
            } else {
                ortho_err = std::max(ortho_err, std::abs(o));
            }
        }
    }
    const json cfg{{"b", 1.0}, {"p", 0.3}, {"c", 0.2}, {"force", 1.0}, {"t", t}, {"n_max", 10}};
    add(out, 8, "mode normalization n<=10", norm_err, 1e-8, cfg);
    add(out, 8, "mode orthogonality n<=10", ortho_err, 1e-8, cfg);
    add(out, 8, "(b - iv)/rho form equals the Gouy form", gouy_err, 1e-10, cfg);
    for (const double f : {0.0, 1.0}) {
        const auto pf = profiles(ParameterProfile::constant(1.0), ParameterProfile::constant(f));
        const ModeSpec spec{4, 1.0, 0.3, ClassicalPath(pf, 0.2, 0.0), 1.0};
        auto fn = [&](double s) { return hg_mode(spec, s, grid); };
        add(out, 8, "mode n=4 Schroedinger residual F=" + std::to_string(static_cast<int>(f)),
            schrodinger_residual(fn, pf, t), 1e-6, json{{"n", 4}, {"force", f}, {"t", t}});
    }
}

// --- 9 ---------------------------------------------------------------------

void completeness(Reports& out) {
    double mehler_err = 0.0;
    const std::vector<std::tuple<cplx, double, double, int>> cases{
        {0.5, 0.0, 0.0, 60}, {0.9, 1.0, -1.0, 200}, {0.9 * std::polar(1.0, 0.7), 0.6, 0.9, 300}};
    for (const auto& [z, x, y, n] : cases) {
        const auto r = mehler_identity(z, x, y, n);
        mehler_err = std::max(mehler_err, std::abs(r.partial_sum - r.closed_form));
    }
    add(out, 9, "Mehler identity dual evaluation |z|<=0.9", mehler_err, 1e-9,
        json{{"cases", 3}, {"z_abs_max", 0.9}});

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> bd(0.2, 3.0), pd(-2.0, 2.0), td(0.0, 4.0);
    double z_err = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double b = bd(rng), p = pd(rng), ta = td(rng), tb = ta + 0.05 + td(rng);
        const cplx z = mehler_z(b, p, ta, tb);
        const cplx lhs = z / (1.0 - z * z);
        const cplx rhs = std::hypot(ta + p, b) * std::hypot(tb + p, b) / cplx(0.0, 2.0 * b * (tb - ta));
        z_err = std::max(z_err, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    add(out, 9, "z/(1-z^2) identity over random (b,p,t_a,t_b)", z_err, 1e-12,
        json{{"samples", 200}, {"seed", 2024}});

    const Grid grid{-24.0, 24.0, 4096};
    const auto g = free_gaussian(GaussianSpec{1.0, 0.0, 1.0}, 0.0, 0.0, 1.0, grid);
    const std::vector<std::pair<std::string, ProfilePair>> cases_m{
        {"F=0", ProfilePair{}},
        {"F=1", profiles(ParameterProfile::constant(1.0), ParameterProfile::constant(1.0))},
        {"M=1+t/2, F=1", profiles(ParameterProfile::polynomial({1.0, 0.5}), ParameterProfile::constant(1.0))},
    };
    for (const auto& [label, params] : cases_m) {
        const ModeSpec family{0, 1.0, 0.0, ClassicalPath(params, 0.0, 0.0), 1.0};
        add(out, 9, "smeared completeness N=60, " + label,
            completeness_residual(family, 60, 0.0, 0.5, g), 1e-6,
            json{{"mass", params.mass.to_json()}, {"force", params.force.to_json()}, {"b", 1.0},
                 {"p", 0.0}, {"t_a", 0.0}, {"t_b", 0.5}, {"N", 60}, {"grid", grid_json(grid)}});
    }
}

// --- 10 --------------------------------------------------------------------

void oracle_integrity(Reports& out) {
    {
        const Grid grid{-20.0, 20.0, 1024};
        const auto params = profiles(ParameterProfile::polynomial({1.0, 0.5}),
                                     ParameterProfile::sinusoidal(0.0, 1.5, 2.0, 0.0));
        const auto psi0 = free_gaussian(GaussianSpec{0.0, 0.5, 1.5}, 0.0, 0.0, 1.0, grid);
        std::vector<WaveSample> runs;
        for (const double dt : {0.02, 0.01, 0.005}) {
            IntegratorConfig cfg;
            cfg.dt = dt;
            runs.push_back(ssf_propagate(params, psi0, 1.0, cfg));
        }
        const double order = std::log2(l2_distance(runs[0], runs[1]) / l2_distance(runs[1], runs[2]));
        add(out, 10, "split-step self-convergence order (|order - 2|)", std::abs(order - 2.0), 0.1,
            json{{"order", order}, {"dt", {0.02, 0.01, 0.005}}, {"T", 1.0}});
    }
    {
        const Grid grid{-20.0, 20.0, 1024};
        const auto params = profiles(ParameterProfile::polynomial({1.0, 0.5}), ParameterProfile::constant(1.0));
        const auto psi0 = free_gaussian(GaussianSpec{-2.0, 1.0, 1.0}, 0.0, 0.0, 1.0, grid);
        SplitStepPropagator prop(params, grid, 1.0);
        std::vector<cplx> psi(psi0.values().begin(), psi0.values().end());
        double previous = norm(psi0);
        double drift = 0.0;
        for (int s = 0; s < 500; ++s) {
            prop.step(psi, s * 1e-3, 1e-3);
            const double now = norm(psi0.with_values(psi));
            drift = std::max(drift, std::abs(now - previous));
            previous = now;
        }
        add(out, 10, "split-step per-step norm drift", drift, 1e-13, json{{"steps", 500}, {"dt", 1e-3}});
    }
    {
        const Grid grid{-20.0, 20.0, 1024};
        const GaussianSpec spec{-2.0, 1.0, 1.0};
        const auto psi0 = free_gaussian(spec, 0.0, 0.0, 1.0, grid);
        IntegratorConfig cfg;
        cfg.dt = 1e-2;
        const auto evolved = ssf_propagate(ProfilePair{}, psi0, 1.0, cfg);
        add(out, 10, "split-step vs closed-form free Gaussian",
            l2_distance(evolved, free_gaussian(spec, 1.0, 1.0, 1.0, grid)), 1e-8,
            json{{"sigma", 1.0}, {"k0", 1.0}, {"x0", -2.0}, {"T", 1.0}, {"dt", 1e-2}});
    }
}

using Runner = void (*)(Reports&);

const Runner kRunners[] = {unitary_equivalence,  airy_stationarity,     shape_invariance,
                           construction_equivalence, varying_mass,      kernel_correctness,
                           oscillator_reduction, mode_family,           completeness,
                           oracle_integrity};

const char* const kTitles[] = {
    "unitary equivalence of forced and free solutions",
    "Airy stationary states",
    "Airy packet shape invariance",
    "U^dagger construction of the free Airy packet",
    "varying-mass Airy packet",
    "linear-potential kernel",
    "w=0 reduction of the oscillator kernel",
    "Hermite-Gaussian mode family",
    "mode completeness and the Mehler sum",
    "split-step oracle integrity",
};

}  // namespace

std::string certificate_title(int criterion) {
    if (criterion < 1 || criterion > 10) {
        throw RangeError("certificate_title: criterion must lie in 1..10");
    }
    return kTitles[criterion - 1];
}

std::vector<CertificateReport> run_certificates(const std::vector<int>& criteria) {
    std::vector<int> which = criteria;
    if (which.empty()) {
        for (int c = 1; c <= 10; ++c) {
            which.push_back(c);
        }
    }
    Reports out;
    for (const int c : which) {
        if (c < 1 || c > 10) {
            throw RangeError("run_certificates: criterion must lie in 1..10");
        }
        try {
            kRunners[c - 1](out);
        } catch (const std::exception& e) {
            CertificateReport r;
            r.criterion = c;
            r.name = certificate_title(c);
            r.pass = false;
            r.residual = std::numeric_limits<double>::quiet_NaN();
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace linpot
