#pragma once

#include "linpot/classical.hpp"
#include "linpot/wave.hpp"

namespace linpot {

/// Snapshot of the classical data that parameterizes U(x_p) at one time.
struct UnitaryData {
    double x_p = 0.0;
    double xdot_p = 0.0;
    double xi = 0.0;
    double mass = 1.0;
    double hbar = 1.0;

    static UnitaryData from_path(const ClassicalPath& path, double t, double hbar);
    void validate() const;
};

/// exp[(i/hbar)(M xdot_p x + xi)] evaluated at x.
cplx unitary_phase(const UnitaryData& u, double x);

/// (U psi)(x) = exp[(i/hbar)(M xdot_p x + xi)] psi(x - x_p).
///
/// The translation is a spectral phase ramp, so it is exact for band-limited
/// data on the periodic grid. Shifts beyond a quarter of the grid span throw
/// WindowError.
WaveSample apply_unitary(const UnitaryData& u, const WaveSample& psi);

/// (U^dagger psi)(x) = exp[-(i/hbar)(M xdot_p (x + x_p) + xi)] psi(x + x_p).
WaveSample apply_unitary_inverse(const UnitaryData& u, const WaveSample& psi);

}  // namespace linpot
