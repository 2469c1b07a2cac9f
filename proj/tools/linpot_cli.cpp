#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linpot/errors.hpp"
#include "linpot/run_config.hpp"

using linpot::RunConfig;

namespace {

std::vector<double> parse_list(const std::string& s, const char* flag) {
    std::vector<double> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw linpot::ConfigError(std::string(flag) + ": cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty()) {
        throw linpot::ConfigError(std::string(flag) + ": empty list");
    }
    return out;
}

std::vector<int> to_ints(const std::vector<double>& v, const char* flag) {
    std::vector<int> out;
    for (double x : v) {
        if (x != static_cast<int>(x)) {
            throw linpot::ConfigError(std::string(flag) + ": expected integers");
        }
        out.push_back(static_cast<int>(x));
    }
    return out;
}

linpot::ParameterProfile parse_profile(const std::string& s, const char* flag) {
    try {
        return linpot::ParameterProfile::from_json(nlohmann::json::parse(s));
    } catch (const nlohmann::json::parse_error&) {
        throw linpot::ConfigError(std::string(flag) + ": expected a number or a JSON profile");
    } catch (const linpot::Error& e) {
        throw linpot::ConfigError(std::string(flag) + ": " + e.what());
    }
}

// Raw flag values; anything left unset keeps the config-file value.
struct Flags {
    std::string config;
    std::optional<std::string> out, grid, mass, force, times;
    bool plot = false;
    std::optional<double> hbar;
    // state
    std::optional<std::string> state, form, modes, criteria, x_a, x_b, method;
    std::optional<double> beta, m, e, c, d, b, p, x0, k0, sigma, t_a, t_b, t0, dt;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON run configuration");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_flag("--plot", f.plot, "also write SVG plots of |psi|^2");
    cmd->add_option("--hbar", f.hbar, "reduced Planck constant");
    cmd->add_option("--grid", f.grid, "xmin,xmax,n");
    cmd->add_option("--mass", f.mass, "mass profile: number or JSON");
    cmd->add_option("--force", f.force, "force profile: number or JSON");
    cmd->add_option("--t", f.times, "comma-separated times");
}

void add_state(CLI::App* cmd, Flags& f) {
    cmd->add_option("--state", f.state, "airy | hg | gaussian");
    cmd->add_option("--beta", f.beta, "Airy beta");
    cmd->add_option("--m", f.m, "Airy reference mass");
    cmd->add_option("--e", f.e, "Airy energy offset e");
    cmd->add_option("--c", f.c, "velocity constant C");
    cmd->add_option("--d", f.d, "position constant D");
    cmd->add_option("--b", f.b, "mode width parameter b");
    cmd->add_option("--p", f.p, "mode focus offset p");
    cmd->add_option("--x0", f.x0, "Gaussian centre");
    cmd->add_option("--k0", f.k0, "Gaussian wavenumber");
    cmd->add_option("--sigma", f.sigma, "Gaussian width");
}

void apply(const Flags& f, RunConfig& cfg) {
    if (f.out) cfg.out = *f.out;
    if (f.plot) cfg.plot = true;
    if (f.hbar) cfg.hbar = *f.hbar;
    if (f.grid) {
        const auto g = parse_list(*f.grid, "--grid");
        if (g.size() != 3 || g[2] <= 0 || g[2] != static_cast<double>(static_cast<std::size_t>(g[2]))) {
            throw linpot::ConfigError("--grid: expected xmin,xmax,n");
        }
        cfg.grid = linpot::Grid{g[0], g[1], static_cast<std::size_t>(g[2])};
    }
    if (f.mass) cfg.params.mass = parse_profile(*f.mass, "--mass");
    if (f.force) cfg.params.force = parse_profile(*f.force, "--force");
    if (f.times) cfg.times = parse_list(*f.times, "--t");
    auto& st = cfg.state;
    if (f.state) st.kind = *f.state;
    if (f.beta) st.airy.beta = *f.beta;
    if (f.m) st.airy.m = *f.m;
    if (f.e) st.airy.e = *f.e;
    if (f.c) st.c = *f.c;
    if (f.d) st.d = *f.d;
    if (f.b) st.b = *f.b;
    if (f.p) st.p = *f.p;
    if (f.x0) st.gaussian.x0 = *f.x0;
    if (f.k0) st.gaussian.k0 = *f.k0;
    if (f.sigma) st.gaussian.sigma = *f.sigma;
    if (f.form) cfg.airy_form = *f.form;
    if (f.modes) {
        cfg.modes = to_ints(parse_list(*f.modes, "--n"), "--n");
        st.n = cfg.modes.front();
    }
    if (f.criteria) cfg.criteria = to_ints(parse_list(*f.criteria, "--criteria"), "--criteria");
    if (f.t_a) cfg.kernel.t_a = *f.t_a;
    if (f.t_b) cfg.kernel.t_b = *f.t_b;
    if (f.x_a) cfg.kernel.x_a = parse_list(*f.x_a, "--x-a");
    if (f.x_b) cfg.kernel.x_b = parse_list(*f.x_b, "--x-b");
    if (f.t0) cfg.evolve.t0 = *f.t0;
    if (f.dt) cfg.evolve.dt = *f.dt;
    if (f.method) cfg.evolve.method = *f.method;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wave packets and propagators for a linear potential with time-dependent mass and force"};
    app.require_subcommand(1);
    Flags f;

    auto* airy = app.add_subcommand("airy", "dump Airy packets at the requested times");
    add_common(airy, f);
    add_state(airy, f);
    airy->add_option("--form", f.form, "general | free | stationary");

    auto* modes = app.add_subcommand("modes", "dump Hermite-Gaussian modes and their Gouy parameters");
    add_common(modes, f);
    add_state(modes, f);
    modes->add_option("--n", f.modes, "comma-separated mode orders");

    auto* kernel = app.add_subcommand("kernel", "evaluate the propagator on x_a x x_b");
    add_common(kernel, f);
    kernel->add_option("--t-a", f.t_a, "initial time");
    kernel->add_option("--t-b", f.t_b, "final time");
    kernel->add_option("--x-a", f.x_a, "comma-separated initial positions");
    kernel->add_option("--x-b", f.x_b, "comma-separated final positions");

    auto* evolve = app.add_subcommand("evolve", "evolve the configured state numerically");
    add_common(evolve, f);
    add_state(evolve, f);
    evolve->add_option("--t0", f.t0, "start time");
    evolve->add_option("--dt", f.dt, "split-step time step");
    evolve->add_option("--method", f.method, "ssf | kernel");

    auto* verify = app.add_subcommand("verify", "run the certificate suite");
    add_common(verify, f);
    verify->add_option("--criteria", f.criteria, "comma-separated criterion numbers (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        RunConfig cfg = f.config.empty() ? RunConfig{} : RunConfig::load(f.config);
        apply(f, cfg);
        return linpot::run_command(command, cfg, std::cout);
    } catch (const linpot::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const linpot::OrderingError& e) {
        std::cerr << "ordering error: " << e.what() << '\n';
        return 3;
    } catch (const linpot::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    }
}
