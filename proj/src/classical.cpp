#include "linpot/classical.hpp"

#include "linpot/errors.hpp"
#include "linpot/quadrature.hpp"

namespace linpot {

ClassicalPath::ClassicalPath(ProfilePair params, double c, double d, double horizon)
    : integrals_(std::make_shared<const ProfileIntegrals>(std::move(params), horizon)), c_(c), d_(d) {}

ClassicalPath::ClassicalPath(std::shared_ptr<const ProfileIntegrals> integrals, double c, double d)
    : integrals_(std::move(integrals)), c_(c), d_(d) {
    if (!integrals_) {
        throw DomainError("ClassicalPath: null integrals");
    }
}

Trajectory ClassicalPath::trajectory(double t) const {
    if (t == 0.0) {
        return {d_, c_ / integrals_->mass(0.0)};
    }
    const auto v = integrals_->at(t);
    return {v.drift + c_ * v.inv_mass + d_, (v.impulse + c_) / integrals_->mass(t)};
}

double ClassicalPath::action_phase(double t) const {
    // int (G + C)^2 / M = int G^2/M + 2C int G/M + C^2 int 1/M
    const auto v = integrals_->at(t);
    return -0.5 * (v.energy + 2.0 * c_ * v.drift + c_ * c_ * v.inv_mass);
}

PathPoint ClassicalPath::at(double t) const {
    const auto v = integrals_->at(t);
    const double m = integrals_->mass(t);
    PathPoint p;
    p.t = t;
    p.x = (t == 0.0) ? d_ : v.drift + c_ * v.inv_mass + d_;
    p.xdot = (v.impulse + c_) / m;
    p.xi = -0.5 * (v.energy + 2.0 * c_ * v.drift + c_ * c_ * v.inv_mass);
    p.mass = m;
    return p;
}

double ClassicalPath::inverse_mass_integral(double t) const { return integrals_->at(t).inv_mass; }

double reparam_time(const ParameterProfile& mass, double m_ref, double t) {
    if (!(m_ref > 0.0)) {
        throw DomainError("reparam_time: reference mass must be positive");
    }
    if (t < mass.t_min() || t > mass.t_max()) {
        throw DomainError("reparam_time: t outside the mass profile domain");
    }
    if (mass.is_constant()) {
        return m_ref / mass(0.0) * t;
    }
    if (t >= 0.0) {
        return m_ref * integrate([&](double s) { return 1.0 / mass(s); }, 0.0, t);
    }
    return -m_ref * integrate([&](double s) { return 1.0 / mass(s); }, t, 0.0);
}

}  // namespace linpot
