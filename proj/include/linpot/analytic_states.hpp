#pragma once

#include "linpot/classical.hpp"
#include "linpot/wave.hpp"

namespace linpot {

/// Airy family for a constant reference mass m and force f = beta^3 / (2m).
struct AirySpec {
    double beta = 1.0;
    double m = 1.0;
    double e = 0.0;  // energy-offset constant; E = beta^3 e / (2m)
    double c = 0.0;  // velocity constant of x_p^f = beta^3 t^2/(4m^2) + c t
    double hbar = 1.0;

    void validate() const;
    double force() const { return beta * beta * beta / (2.0 * m); }
    double energy() const { return force() * e; }
    /// beta / hbar^{2/3}
    double kappa() const;
};

/// Ai[-(beta/hbar^{2/3})(x + e)] exp(-i E t / hbar).
WaveSample airy_stationary(const AirySpec& spec, double t, const Grid& grid);

/// Free-particle Airy packet U^dagger(x_p^f) psi^f in closed form; with
/// c = e = 0 it is the non-spreading, accelerating packet.
WaveSample airy_free_packet(const AirySpec& spec, double t, const Grid& grid);
cplx airy_free_value(const AirySpec& spec, double t, double x);

/// Airy packet for time-dependent M(t), F(t): U(x_p^M) applied to the free
/// packet at the reparameterized time tau = int_0^t m/M. The translation is
/// done on the closed form, so no wraparound arises.
WaveSample airy_general_packet(const AirySpec& spec, const ProfilePair& params, double t,
                               const Grid& grid);
WaveSample airy_general_packet(const AirySpec& spec, const ClassicalPath& forced_path, double t,
                               const Grid& grid);

/// Argument of Ai inside the general packet at (t, x).
double airy_general_argument(const AirySpec& spec, const ClassicalPath& forced_path, double t,
                             double x);

/// Free Gaussian of unit mass: initial width sigma, centre x0, wavenumber k0.
struct GaussianSpec {
    double x0 = 0.0;
    double k0 = 0.0;
    double sigma = 1.0;
};

/// The Gaussian evolved for a unit-mass "time" v; for mass M(t) use
/// v = int_0^t dt'/M. The sample carries time stamp t.
WaveSample free_gaussian(const GaussianSpec& spec, double v, double t, double hbar,
                         const Grid& grid);
cplx free_gaussian_value(const GaussianSpec& spec, double v, double hbar, double x);

/// Hermite-Gaussian family for the linear potential.
struct ModeSpec {
    int n = 0;
    double b = 1.0;
    double p = 0.0;
    ClassicalPath path;
    double hbar = 1.0;

    void validate() const;
    /// v(t) = int_0^t dt'/M + p
    double v(double t) const { return path.inverse_mass_integral(t) + p; }
    /// rho(t) = sqrt(v^2 + b^2)
    double rho(double t) const;
};

struct GouyParams {
    double chi = 0.0;    // atan2(v, b)
    double gamma = 0.0;  // spot size, gamma^2 = hbar rho^2 / b
    double inv_s = 0.0;  // 1/s = v / rho^2; 0 encodes a flat wavefront
};

GouyParams gouy_parameters(const ModeSpec& spec, double t);
GouyParams gouy_from_v(double b, double v, double hbar);

/// psi_n(t, x) from the (b - iv)/rho form.
WaveSample hg_mode(const ModeSpec& spec, double t, const Grid& grid);
/// Same mode rebuilt from (chi, gamma, s).
WaveSample hg_mode_gouy(const ModeSpec& spec, double t, const Grid& grid);

/// Single-point evaluation of psi_n (spec.n) from its classical data.
cplx hg_mode_value(const ModeSpec& spec, const PathPoint& point, double v, double x);

/// psi_0 .. psi_{n_max} sampled on the grid in one recurrence pass, without
/// the coverage check (high orders may legitimately spill off the grid when
/// their weight in an expansion is negligible).
std::vector<std::vector<cplx>> hg_mode_family(const ModeSpec& spec, int n_max, double t,
                                              const Grid& grid);

}  // namespace linpot
