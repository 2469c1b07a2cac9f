#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "json.hpp"

namespace linpot {

/// A time-dependent scalar parameter, either the mass M(t) or the force F(t).
///
/// Profiles are immutable values. Evaluation outside [t_min, t_max] throws
/// DomainError. Tabulated profiles interpolate with a natural cubic spline.
class ParameterProfile {
public:
    enum class Kind { Constant, Polynomial, Sinusoidal, Tabulated };

    static constexpr double kDefaultTMax = 100.0;

    static ParameterProfile constant(double value, double t_max = kDefaultTMax);
    /// sum_i coefficients[i] * t^i
    static ParameterProfile polynomial(std::vector<double> coefficients,
                                       double t_max = kDefaultTMax);
    /// offset + amplitude * sin(omega * t + phase)
    static ParameterProfile sinusoidal(double offset, double amplitude, double omega,
                                       double phase = 0.0, double t_max = kDefaultTMax);
    /// Samples (t, value), strictly increasing in t, at least 4 of them.
    static ParameterProfile tabulated(std::vector<std::pair<double, double>> samples);

    static ParameterProfile from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    double operator()(double t) const;
    double value(double t) const { return (*this)(t); }

    Kind kind() const { return kind_; }
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    bool is_constant() const { return kind_ == Kind::Constant; }

    /// Throws DomainError unless the profile is strictly positive on its domain.
    /// Analytic kinds are checked on a dense sample; tabulated ones at the
    /// knots and between them.
    void require_positive(const char* what) const;

private:
    struct Spline;

    ParameterProfile() = default;

    Kind kind_ = Kind::Constant;
    std::vector<double> coeffs_;
    std::vector<std::pair<double, double>> samples_;
    std::shared_ptr<const Spline> spline_;
    double t_min_ = 0.0;
    double t_max_ = kDefaultTMax;
};

/// Mass and force together; the pair that defines H = p^2/2M(t) - x F(t).
struct ProfilePair {
    ParameterProfile mass = ParameterProfile::constant(1.0);
    ParameterProfile force = ParameterProfile::constant(0.0);
};

/// Running integrals from 0 to t of the combinations every closed form needs:
///
///   inv_mass = int_0^t dt'/M
///   impulse  = int_0^t F dt'                      (G)
///   drift    = int_0^t G(t')/M(t') dt'
///   energy   = int_0^t G(t')^2/M(t') dt'
///
/// Values are tabulated on a uniform grid of kNodes intervals at construction
/// and refined between nodes by a local Gauss-Legendre pass from the nearest
/// node, which keeps every query O(1) and smooth in t.
class ProfileIntegrals {
public:
    static constexpr int kNodes = 2048;

    struct Values {
        double inv_mass = 0.0;
        double impulse = 0.0;
        double drift = 0.0;
        double energy = 0.0;
    };

    /// horizon <= 0 selects the common domain end of the two profiles.
    explicit ProfileIntegrals(ProfilePair params, double horizon = 0.0);

    Values at(double t) const;

    /// Integrals of the same combinations with the lower limit moved to t_a,
    /// i.e. G measured from t_a: int_{t_a}^{t_b} dt/M, int F, the particular
    /// solution x_ph(t_b) and int (int_{t_a}^t F)^2 / M.
    Values between(double t_a, double t_b) const;

    const ProfilePair& params() const { return params_; }
    double mass(double t) const { return params_.mass(t); }
    double force(double t) const { return params_.force(t); }
    double horizon() const { return horizon_; }

private:
    Values local(int node, double t) const;
    double impulse_local(int node, double t) const;

    ProfilePair params_;
    double horizon_ = 0.0;
    double step_ = 0.0;
    std::vector<Values> table_;
};

}  // namespace linpot
