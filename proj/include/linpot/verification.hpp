#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "linpot/profiles.hpp"
#include "linpot/propagators.hpp"
#include "linpot/wave.hpp"

namespace linpot {

using StateFn = std::function<WaveSample(double)>;

/// Relative L2 residual of i hbar psi_t - H psi on the central `window`
/// fraction, normalized by ||H psi|| + ||i hbar psi_t||. The time derivative
/// is a five-point central difference with step dt_probe in [1e-6, 1e-3];
/// psi_xx is spectral, taken after a smooth taper that is 1 on the window.
double schrodinger_residual(const StateFn& state_fn, const ProfilePair& params, double t,
                            double dt_probe = 1e-4, double window = 0.8);

/// ||(H - E) phi|| / (||T phi|| + ||V phi|| + |E| ||phi||) on the window, for
/// H = p^2/2m - f x with constant m and f.
double eigen_residual(const WaveSample& phi, double mass, double force, double energy,
                      double window = 0.8);

struct CoincidenceSetup {
    double support_lo = -20.0;
    double support_hi = 20.0;
    std::vector<double> probes{-1.0, -0.25, 0.0, 0.5, 1.0};
    double hbar = 1.0;
    KernelQuadrature quad;
};

/// max over probes of |int K(t_a + eps, x; y, t_a) g(y) dy - g(x)| for each
/// eps. Epsilons must be positive and strictly decreasing.
std::vector<double> coincidence_limit_check(const ProfilePair& params, double t_a,
                                            std::span<const double> epsilons,
                                            const std::function<cplx(double)>& g,
                                            const CoincidenceSetup& setup = {});

/// sup | |psi_t(x)| - |psi_0(x - shift)| | on the window. The shift must be a
/// whole number of cells (CommensurabilityError) and leave the window inside
/// the grid (WindowError).
double shape_invariance_metric(const WaveSample& psi_t, const WaveSample& psi_0, double shift,
                               double window = 0.8);

struct UnitaryCheckOptions {
    double c = 0.0;
    double d = 0.0;
    double hbar = 1.0;
    double dt_probe = 1e-4;
    /// -1 flips the sign of xi (negative control).
    double xi_sign = 1.0;
};

/// Schroedinger residual under the full H of apply_unitary(psi_free(t)), where
/// psi_free_fn(t) solves the force-free equation with the mass profile of params.
double unitary_equivalence_check(const ProfilePair& params, const StateFn& psi_free_fn, double t,
                                 const UnitaryCheckOptions& options = {});

/// One numerical certificate. For bound == "max" the check passes when
/// residual <= tolerance; negative controls use bound == "min" and pass
/// when residual >= tolerance.
struct CertificateReport {
    int criterion = 0;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string bound = "max";
    bool pass = false;
    nlohmann::json config = nlohmann::json::object();
    std::string error;
};

void to_json(nlohmann::json& j, const CertificateReport& r);

/// Runs the certificates of the acceptance criteria in `criteria` (all of
/// 1..10 when empty). Exceptions inside a certificate are reported as
/// failures with the message in `error`.
std::vector<CertificateReport> run_certificates(const std::vector<int>& criteria = {});

/// Criterion numbers 1..10 with a one-line title each.
std::string certificate_title(int criterion);

}  // namespace linpot
