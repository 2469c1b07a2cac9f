#pragma once

#include <functional>

#include "linpot/profiles.hpp"
#include "linpot/wave.hpp"

namespace linpot {

/// Strang split-step Fourier integration of
///   i hbar psi_t = -hbar^2/(2M(t)) psi_xx - x F(t) psi.
struct IntegratorConfig {
    /// Largest allowed |time step|; the actual step is (t1 - t0)/ceil(|t1 - t0|/dt).
    double dt = 1e-3;
    /// Probability allowed in the outer 5% of the grid before BoundaryError.
    double boundary_tail = 1e-8;
    /// Steps between boundary checks (the final state is always checked).
    int boundary_check_every = 64;

    void validate() const;
};

/// One propagator bound to a grid. Each step is exactly unitary: two
/// position-space phases around one momentum-space phase, with M and F
/// sampled at the step midpoint.
class SplitStepPropagator {
public:
    SplitStepPropagator(ProfilePair params, const Grid& grid, double hbar);

    /// Advance psi in place from t to t + h (h may be negative).
    void step(std::vector<cplx>& psi, double t, double h) const;

    /// hbar k^2 |h| / (2 M) at the largest occupied wavenumber of psi
    /// (spectral power above 1e-14 of the total) and the smallest mass on
    /// [t, t + h].
    double kinetic_phase(std::span<const cplx> psi, double h, double m_min) const;

private:
    ProfilePair params_;
    Grid grid_;
    double hbar_;
    std::vector<double> k2_;
    std::vector<double> xs_;
};

/// psi0 evolved from psi0.t() to t1. Throws BoundaryError when probability
/// reaches the grid edge and ResolutionError when dt under-resolves the
/// occupied kinetic phase (limit pi/4 per step).
WaveSample ssf_propagate(const ProfilePair& params, const WaveSample& psi0, double t1,
                         const IntegratorConfig& config = {});

/// L2 norm sqrt(int |psi|^2 dx) over the periodic grid.
double norm(const WaveSample& psi);

/// L2 norm of a - b over the central `window` fraction (trapezoidal rule).
double l2_distance(const WaveSample& a, const WaveSample& b, double window = 1.0);

/// <a|b> = int conj(a) b dx over the periodic grid.
cplx overlap(const WaveSample& a, const WaveSample& b);

/// Probability-weighted mean position.
double mean_position(const WaveSample& psi);

}  // namespace linpot
