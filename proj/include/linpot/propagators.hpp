#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "linpot/analytic_states.hpp"
#include "linpot/profiles.hpp"
#include "linpot/quadrature.hpp"
#include "linpot/wave.hpp"

namespace linpot {

/// Endpoints of a kernel evaluation K(t_b, x_b; x_a, t_a).
struct KernelQuery {
    double t_a = 0.0;
    double x_a = 0.0;
    double t_b = 1.0;
    double x_b = 0.0;

    /// Throws OrderingError unless t_b > t_a.
    void validate() const;
};

/// Kernel of H = p^2/2M(t) - x F(t):
///
///   K = (2 pi i hbar J)^{-1/2} exp{(i/2hbar)[(x_a - x_b + x_ph)^2/J + 2 x_b S - R]}
///
/// with J = int dt/M, S = int F, x_ph the particular solution and
/// R = int (int F)^2/M, all taken from t_a to t_b. The square root is the
/// principal branch, (2 pi hbar J)^{-1/2} e^{-i pi/4}.
cplx linear_kernel(const ProfileIntegrals& integrals, const KernelQuery& q, double hbar);
cplx linear_kernel(const ProfilePair& params, const KernelQuery& q, double hbar);

/// Classical data for the generalized oscillator L = M x'^2/2 - M w^2 x^2/2 + F x,
/// normalized at t_a: u_c(t_a) = 1, v_s(t_a) = 0, x_ph(t_a) = x_ph'(t_a) = 0.
struct OscillatorClassicalData {
    RealFunction u_c;
    RealFunction u_c_dot;
    RealFunction v_s;
    RealFunction v_s_dot;
    RealFunction x_ph;
    RealFunction x_ph_dot;
    ParameterProfile w = ParameterProfile::constant(0.0);
    ParameterProfile mass = ParameterProfile::constant(1.0);
    double t_a = 0.0;

    /// Throws DomainError when the normalization conditions fail by more than 1e-10.
    void validate() const;

    /// w = 0 data for the given mass and force, built from closed quadratures.
    static OscillatorClassicalData free_linear(std::shared_ptr<const ProfileIntegrals> integrals,
                                               double t_a);
};

/// Oscillator kernel from caller-supplied classical solutions. Throws
/// CausticError when v_s(t_b) vanishes.
cplx oscillator_kernel(const OscillatorClassicalData& data, const KernelQuery& q, double hbar);

/// Options for applying the kernel as an integral operator.
struct KernelQuadrature {
    int nodes_per_panel = 16;
    /// Panels are at most this fraction of the local kernel wavelength.
    double panel_fraction = 0.25;
    /// Hard cap on the quadrature nodes; exceeding it is a ResolutionError.
    std::size_t max_nodes = 1u << 21;
};

/// int K(t_b, x; y, t_a) g(y) dy over [support_lo, support_hi] for each x in xs.
std::vector<cplx> apply_kernel(const ProfileIntegrals& integrals, double t_a, double t_b,
                               double hbar, const std::function<cplx(double)>& g,
                               double support_lo, double support_hi, std::span<const double> xs,
                               const KernelQuadrature& quad = {});

/// psi(t_b) = int K psi_a dx_a on psi_a's grid. psi_a is read through its
/// trigonometric interpolant. Throws ResolutionError when the kernel
/// oscillation at the grid edge has fewer than 8 grid points per wavelength.
WaveSample propagate_with_kernel(const ProfileIntegrals& integrals, const WaveSample& psi_a,
                                 double t_b, const KernelQuadrature& quad = {});

/// Finite-difference residual of i hbar K_t = -hbar^2/(2M) K_xx - x F K in
/// the (t_b, x_b) slot, relative to the sum of the term magnitudes.
double kernel_equation_residual(const ProfileIntegrals& integrals, const KernelQuery& q,
                                double hbar, double step_t = 1e-3, double step_x = 1e-3);

/// z = sqrt((b - i(t_b+p))/(b + i(t_b+p))) sqrt((b + i(t_a+p))/(b - i(t_a+p))).
cplx mehler_z(double b, double p, double t_a, double t_b);
/// Same with general v(t_a), v(t_b).
cplx mehler_z_from_v(double b, double v_a, double v_b);

struct MehlerComparison {
    cplx partial_sum;
    cplx closed_form;
    /// Set when |z| > 0.95: the partial sum may not have converged.
    bool convergence_warning = false;
};

/// sum_{n<=N} z^{n+1/2}/(2^n n!) H_n(X) H_n(Y) against the closed form
/// sqrt(z/(1-z^2)) exp[-z^2/(1-z^2)(X^2+Y^2) + 2z/(1-z^2) XY].
MehlerComparison mehler_identity(cplx z, double x, double y, int n_max);

/// L2 distance on the central 80% window between the kernel-propagated g and
/// its expansion sum_{n<=N} psi_n(t_b) <psi_n(t_a)|g>. The family shares
/// b, p and the classical path of `family` (its n is ignored).
double completeness_residual(const ModeSpec& family, int n_max, double t_a, double t_b,
                             const WaveSample& g, const KernelQuadrature& quad = {});

}  // namespace linpot
