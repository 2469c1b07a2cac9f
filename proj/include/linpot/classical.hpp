#pragma once

#include <memory>

#include "linpot/profiles.hpp"

namespace linpot {

struct Trajectory {
    double x = 0.0;     // x_p(t)
    double xdot = 0.0;  // dx_p/dt
};

/// Everything the unitary map needs at one instant.
struct PathPoint {
    double t = 0.0;
    double x = 0.0;
    double xdot = 0.0;
    double xi = 0.0;
    double mass = 1.0;
};

/// Classical solution of d/dt(M dx/dt) = F,
///
///   x_p(t) = int_0^t (G(t') + C)/M(t') dt' + D,  G(t) = int_0^t F,
///
/// with the velocity taken from the first integral M x_p' = G + C and the
/// phase xi(t) = -1/2 int_0^t M x_p'^2 dt'. Immutable; copies share the
/// cached integrals.
class ClassicalPath {
public:
    ClassicalPath(ProfilePair params, double c, double d, double horizon = 0.0);
    ClassicalPath(std::shared_ptr<const ProfileIntegrals> integrals, double c, double d);

    Trajectory trajectory(double t) const;
    double action_phase(double t) const;
    PathPoint at(double t) const;

    /// int_0^t dt'/M(t')
    double inverse_mass_integral(double t) const;

    double c() const { return c_; }
    double d() const { return d_; }
    const ProfilePair& params() const { return integrals_->params(); }
    const std::shared_ptr<const ProfileIntegrals>& integrals() const { return integrals_; }

private:
    std::shared_ptr<const ProfileIntegrals> integrals_;
    double c_ = 0.0;
    double d_ = 0.0;
};

/// tau(t) = int_0^t m_ref / M(t') dt', the time at which a constant-mass
/// (m_ref) free solution reproduces the varying-mass one.
double reparam_time(const ParameterProfile& mass, double m_ref, double t);

}  // namespace linpot
