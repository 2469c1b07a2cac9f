#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "linpot/analytic_states.hpp"
#include "linpot/profiles.hpp"
#include "linpot/wave.hpp"

namespace linpot {

/// Initial or analytic state selected by a run.
struct StateConfig {
    std::string kind = "airy";  // airy | hg | gaussian
    AirySpec airy;
    GaussianSpec gaussian;
    int n = 0;
    double b = 1.0;
    double p = 0.0;
    double c = 0.0;  // classical-path constants of the hg family
    double d = 0.0;
};

struct KernelConfig {
    double t_a = 0.0;
    double t_b = 1.0;
    std::vector<double> x_a{0.0};
    std::vector<double> x_b{0.0};
};

struct EvolveConfig {
    double t0 = 0.0;
    std::string method = "ssf";  // ssf | kernel
    double dt = 1e-3;
};

/// Everything a CLI run needs. JSON keys mirror the field names; unknown keys
/// are rejected with the offending JSON path in the message.
struct RunConfig {
    double hbar = 1.0;
    ProfilePair params;
    Grid grid;
    StateConfig state;
    std::vector<double> times{0.0};
    std::string out = ".";
    bool plot = false;
    std::string airy_form = "general";  // general | free | stationary
    std::vector<int> modes{};           // empty: state.n only
    KernelConfig kernel;
    EvolveConfig evolve;
    std::vector<int> criteria{};        // empty: all

    /// Throws ConfigError on any precondition violation.
    void validate() const;

    static RunConfig from_json(const nlohmann::json& j);
    /// Parses a JSON file; syntax errors report line and column.
    static RunConfig load(const std::string& path);
    nlohmann::json to_json() const;
};

/// Executes one command; returns the process exit status (0 on success,
/// 1 when a certificate fails). Library errors propagate as exceptions.
int run_command(const std::string& command, const RunConfig& config, std::ostream& log);

}  // namespace linpot
