#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>

#include "linpot/classical.hpp"
#include "linpot/errors.hpp"
#include "linpot/oracle.hpp"
#include "linpot/propagators.hpp"
#include "linpot/run_config.hpp"
#include "linpot/unitary.hpp"
#include "linpot/verification.hpp"

namespace linpot {

namespace fs = std::filesystem;

namespace {

std::string label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", t);
    return buf;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream f(path);
    if (!f) {
        throw ConfigError("cannot open '" + path.string() + "' for writing");
    }
    f << std::setprecision(17);
    return f;
}

// Line chart of |psi|^2 against x.
void write_svg(const fs::path& path, const WaveSample& psi, const std::string& title) {
    constexpr double kW = 640.0, kH = 360.0, kPad = 30.0;
    double peak = 0.0;
    for (const auto& v : psi.values()) {
        peak = std::max(peak, std::norm(v));
    }
    if (!(peak > 0.0)) {
        peak = 1.0;
    }
    const Grid& g = psi.grid();
    const std::size_t stride = std::max<std::size_t>(1, g.n / 1024);
    std::ofstream f = open_out(path);
    f << std::fixed << std::setprecision(2);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\">\n";
    f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    f << "<text x=\"" << kPad << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">" << title
      << "</text>\n";
    f << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
    for (std::size_t j = 0; j < g.n; j += stride) {
        const double px = kPad + (kW - 2 * kPad) * (g.x(j) - g.xmin) / g.span();
        const double py = kH - kPad - (kH - 2 * kPad) * std::norm(psi[j]) / peak;
        f << px << ',' << py << ' ';
    }
    f << "\"/>\n</svg>\n";
}

void emit(const RunConfig& c, const std::string& stem, const WaveSample& psi, std::ostream& log) {
    const fs::path csv = fs::path(c.out) / (stem + ".csv");
    write_wave_csv(csv.string(), psi);
    log << "wrote " << csv.string() << '\n';
    if (c.plot) {
        const fs::path svg = fs::path(c.out) / (stem + ".svg");
        write_svg(svg, psi, stem);
        log << "wrote " << svg.string() << '\n';
    }
}

AirySpec airy_spec(const RunConfig& c) {
    AirySpec spec = c.state.airy;
    spec.c = c.state.c;
    spec.hbar = c.hbar;
    return spec;
}

ModeSpec mode_spec(const RunConfig& c, int n) {
    return ModeSpec{n, c.state.b, c.state.p, ClassicalPath(c.params, c.state.c, c.state.d), c.hbar};
}

// Exact solution of the configured state at time t.
WaveSample analytic_state(const RunConfig& c, double t) {
    if (c.state.kind == "airy") {
        return airy_general_packet(airy_spec(c), c.params, t, c.grid);
    }
    if (c.state.kind == "hg") {
        return hg_mode(mode_spec(c, c.state.n), t, c.grid);
    }
    const ClassicalPath path(c.params, 0.0, 0.0);
    const auto free = free_gaussian(c.state.gaussian, path.inverse_mass_integral(t), t, c.hbar, c.grid);
    return apply_unitary(UnitaryData::from_path(path, t, c.hbar), free);
}

int cmd_airy(const RunConfig& c, std::ostream& log) {
    const AirySpec spec = airy_spec(c);
    for (const double t : c.times) {
        WaveSample psi = c.airy_form == "free"         ? airy_free_packet(spec, t, c.grid)
                         : c.airy_form == "stationary" ? airy_stationary(spec, t, c.grid)
                                                       : airy_general_packet(spec, c.params, t, c.grid);
        emit(c, "airy_" + c.airy_form + "_t" + label(t), psi, log);
    }
    return 0;
}

int cmd_modes(const RunConfig& c, std::ostream& log) {
    const std::vector<int> orders = c.modes.empty() ? std::vector<int>{c.state.n} : c.modes;
    const fs::path table = fs::path(c.out) / "modes_gouy.csv";
    std::ofstream f = open_out(table);
    f << "n,t,v,rho,chi,gamma,inv_s\n";
    for (const int n : orders) {
        const ModeSpec spec = mode_spec(c, n);
        for (const double t : c.times) {
            emit(c, "mode_n" + std::to_string(n) + "_t" + label(t), hg_mode(spec, t, c.grid), log);
            const GouyParams g = gouy_parameters(spec, t);
            f << n << ',' << t << ',' << spec.v(t) << ',' << spec.rho(t) << ',' << g.chi << ','
              << g.gamma << ',' << g.inv_s << '\n';
        }
    }
    log << "wrote " << table.string() << '\n';
    return 0;
}

int cmd_kernel(const RunConfig& c, std::ostream& log) {
    const auto& k = c.kernel;
    KernelQuery{k.t_a, 0.0, k.t_b, 0.0}.validate();
    const ProfileIntegrals integrals(c.params, k.t_b);
    const fs::path path = fs::path(c.out) / "kernel.csv";
    std::ofstream f = open_out(path);
    f << "t_a,t_b,x_a,x_b,re,im,abs\n";
    for (const double xa : k.x_a) {
        for (const double xb : k.x_b) {
            const cplx v = linear_kernel(integrals, {k.t_a, xa, k.t_b, xb}, c.hbar);
            f << k.t_a << ',' << k.t_b << ',' << xa << ',' << xb << ',' << v.real() << ',' << v.imag()
              << ',' << std::abs(v) << '\n';
        }
    }
    log << "wrote " << path.string() << '\n';
    return 0;
}

int cmd_evolve(const RunConfig& c, std::ostream& log) {
    std::vector<double> times = c.times;
    std::sort(times.begin(), times.end());
    const WaveSample initial = analytic_state(c, c.evolve.t0);
    IntegratorConfig integrator;
    integrator.dt = c.evolve.dt;
    const auto integrals = std::make_shared<const ProfileIntegrals>(c.params);
    const fs::path summary = fs::path(c.out) / ("evolve_" + c.evolve.method + "_summary.csv");
    std::ofstream f = open_out(summary);
    f << "t,norm,mean_x,l2_vs_analytic\n";
    WaveSample current = initial;
    for (const double t : times) {
        if (t < c.evolve.t0) {
            throw OrderingError("evolve: time " + label(t) + " precedes t0");
        }
        WaveSample psi = initial;
        if (t > c.evolve.t0) {
            if (c.evolve.method == "ssf") {
                current = ssf_propagate(c.params, current, t, integrator);
                psi = current;
            } else {
                psi = propagate_with_kernel(*integrals, initial, t);
            }
        }
        emit(c, "evolve_" + c.evolve.method + "_t" + label(t), psi, log);
        f << t << ',' << norm(psi) << ',' << mean_position(psi) << ','
          << l2_distance(psi, analytic_state(c, t), 0.8) << '\n';
    }
    log << "wrote " << summary.string() << '\n';
    return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& log) {
    const auto reports = run_certificates(c.criteria);
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass;
        log << (r.pass ? "PASS " : "FAIL ") << '[' << r.criterion << "] " << r.name
            << "  residual=" << r.residual << " tolerance=" << r.tolerance
            << (r.bound == "min" ? " (lower bound)" : "") << (r.error.empty() ? "" : "  error: " + r.error)
            << '\n';
    }
    const fs::path path = fs::path(c.out) / "verify.json";
    std::ofstream f = open_out(path);
    f << nlohmann::json(reports).dump(2) << '\n';
    log << "wrote " << path.string() << '\n';
    return all ? 0 : 1;
}

}  // namespace

int run_command(const std::string& command, const RunConfig& config, std::ostream& log) {
    config.validate();
    fs::create_directories(config.out);
    if (command == "airy") {
        return cmd_airy(config, log);
    }
    if (command == "modes") {
        return cmd_modes(config, log);
    }
    if (command == "kernel") {
        return cmd_kernel(config, log);
    }
    if (command == "evolve") {
        return cmd_evolve(config, log);
    }
    if (command == "verify") {
        return cmd_verify(config, log);
    }
    throw ConfigError("unknown command '" + command + "'");
}

}  // namespace linpot
