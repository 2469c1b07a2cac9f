#pragma once

#include <span>
#include <vector>

#include "linpot/wave.hpp"

// Fourier-space helpers on periodic uniform grids, backed by FFTW.
namespace linpot::spectral {

/// Unnormalized forward DFT (sign -1).
std::vector<cplx> forward(std::span<const cplx> in);
/// Inverse DFT including the 1/n factor.
std::vector<cplx> inverse(std::span<const cplx> in);

/// Angular wavenumbers in FFT order; the Nyquist entry is -pi/dx.
std::vector<double> wavenumbers(const Grid& grid);

/// Samples of f(x - shift) from samples of f, by a phase ramp in k-space.
std::vector<cplx> shift(std::span<const cplx> values, const Grid& grid, double shift);

/// d^2 f / dx^2 of the trigonometric interpolant.
std::vector<cplx> second_derivative(std::span<const cplx> values, const Grid& grid);

/// Smooth window equal to 1 on the central `plateau_fraction` of the grid,
/// falling (C-infinity) to exactly 0 outside the central `support_fraction`.
std::vector<double> plateau_taper(const Grid& grid, double plateau_fraction,
                                  double support_fraction = 0.96);

/// Trigonometric interpolant evaluated at arbitrary points.
std::vector<cplx> interpolate(std::span<const cplx> values, const Grid& grid,
                              std::span<const double> xs);

}  // namespace linpot::spectral
