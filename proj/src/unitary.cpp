#include "linpot/unitary.hpp"

#include <cmath>

#include "linpot/errors.hpp"
#include "linpot/spectral.hpp"

namespace linpot {

UnitaryData UnitaryData::from_path(const ClassicalPath& path, double t, double hbar) {
    const PathPoint p = path.at(t);
    UnitaryData u{p.x, p.xdot, p.xi, p.mass, hbar};
    u.validate();
    return u;
}

void UnitaryData::validate() const {
    if (!std::isfinite(x_p) || !std::isfinite(xdot_p) || !std::isfinite(xi)) {
        throw DomainError("UnitaryData: non-finite classical data");
    }
    if (!(mass > 0.0) || !(hbar > 0.0)) {
        throw DomainError("UnitaryData: mass and hbar must be positive");
    }
}

cplx unitary_phase(const UnitaryData& u, double x) {
    return std::polar(1.0, (u.mass * u.xdot_p * x + u.xi) / u.hbar);
}

namespace {

void check_compatible(const UnitaryData& u, const WaveSample& psi) {
    u.validate();
    if (std::abs(u.hbar - psi.hbar()) > 1e-14 * psi.hbar()) {
        throw ShapeError("unitary map: hbar differs from the wave sample's");
    }
    if (std::abs(u.x_p) > 0.25 * psi.grid().span()) {
        throw WindowError("unitary map: shift exceeds 25% of the grid span");
    }
}

}  // namespace

WaveSample apply_unitary(const UnitaryData& u, const WaveSample& psi) {
    check_compatible(u, psi);
    const Grid& grid = psi.grid();
    std::vector<cplx> out = (u.x_p == 0.0)
                                ? std::vector<cplx>(psi.values().begin(), psi.values().end())
                                : spectral::shift(psi.values(), grid, u.x_p);
    for (std::size_t j = 0; j < grid.n; ++j) {
        out[j] *= unitary_phase(u, grid.x(j));
    }
    return psi.with_values(std::move(out));
}

WaveSample apply_unitary_inverse(const UnitaryData& u, const WaveSample& psi) {
    check_compatible(u, psi);
    const Grid& grid = psi.grid();
    std::vector<cplx> out(psi.values().begin(), psi.values().end());
    for (std::size_t j = 0; j < grid.n; ++j) {
        out[j] *= std::conj(unitary_phase(u, grid.x(j)));
    }
    if (u.x_p != 0.0) {
        out = spectral::shift(out, grid, -u.x_p);
    }
    return psi.with_values(std::move(out));
}

}  // namespace linpot
