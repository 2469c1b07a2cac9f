#include "linpot/profiles.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "linpot/errors.hpp"
#include "linpot/quadrature.hpp"

namespace linpot {

struct ParameterProfile::Spline {
    gsl_spline* handle = nullptr;

    explicit Spline(const std::vector<std::pair<double, double>>& samples) {
        gsl_set_error_handler_off();
        std::vector<double> ts;
        std::vector<double> vs;
        for (const auto& [t, v] : samples) {
            ts.push_back(t);
            vs.push_back(v);
        }
        handle = gsl_spline_alloc(gsl_interp_cspline, samples.size());
        if (handle == nullptr || gsl_spline_init(handle, ts.data(), vs.data(), ts.size()) != 0) {
            if (handle != nullptr) {
                gsl_spline_free(handle);
            }
            throw DomainError("tabulated profile: spline construction failed");
        }
    }
    ~Spline() { gsl_spline_free(handle); }
    Spline(const Spline&) = delete;
    Spline& operator=(const Spline&) = delete;

    double operator()(double t) const { return gsl_spline_eval(handle, t, nullptr); }
};

ParameterProfile ParameterProfile::constant(double value, double t_max) {
    ParameterProfile p;
    p.kind_ = Kind::Constant;
    p.coeffs_ = {value};
    p.t_max_ = t_max;
    return p;
}

ParameterProfile ParameterProfile::polynomial(std::vector<double> coefficients, double t_max) {
    if (coefficients.empty()) {
        throw DomainError("polynomial profile needs at least one coefficient");
    }
    ParameterProfile p;
    p.kind_ = Kind::Polynomial;
    p.coeffs_ = std::move(coefficients);
    p.t_max_ = t_max;
    return p;
}

ParameterProfile ParameterProfile::sinusoidal(double offset, double amplitude, double omega,
                                              double phase, double t_max) {
    ParameterProfile p;
    p.kind_ = Kind::Sinusoidal;
    p.coeffs_ = {offset, amplitude, omega, phase};
    p.t_max_ = t_max;
    return p;
}

ParameterProfile ParameterProfile::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 4) {
        throw DomainError("tabulated profile needs at least 4 samples");
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].first > samples[i - 1].first)) {
            throw DomainError("tabulated profile samples must be strictly increasing in t");
        }
    }
    for (const auto& [t, v] : samples) {
        if (!std::isfinite(t) || !std::isfinite(v)) {
            throw DomainError("tabulated profile samples must be finite");
        }
    }
    ParameterProfile p;
    p.kind_ = Kind::Tabulated;
    p.t_min_ = samples.front().first;
    p.t_max_ = samples.back().first;
    p.spline_ = std::make_shared<const Spline>(samples);
    p.samples_ = std::move(samples);
    return p;
}

double ParameterProfile::operator()(double t) const {
    if (!(t >= t_min_ && t <= t_max_)) {
        throw DomainError("profile evaluated outside its domain at t=" + std::to_string(t));
    }
    switch (kind_) {
        case Kind::Constant:
            return coeffs_[0];
        case Kind::Polynomial: {
            double acc = 0.0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
                acc = acc * t + *it;
            }
            return acc;
        }
        case Kind::Sinusoidal:
            return coeffs_[0] + coeffs_[1] * std::sin(coeffs_[2] * t + coeffs_[3]);
        case Kind::Tabulated:
            return (*spline_)(t);
    }
    return 0.0;
}

void ParameterProfile::require_positive(const char* what) const {
    constexpr int kProbes = 8192;
    for (int i = 0; i <= kProbes; ++i) {
        const double t = t_min_ + (t_max_ - t_min_) * i / kProbes;
        if (!((*this)(t) > 0.0)) {
            throw DomainError(std::string(what) + " must be positive on its domain (fails at t=" +
                              std::to_string(t) + ")");
        }
    }
    for (const auto& [t, v] : samples_) {
        if (!(v > 0.0)) {
            throw DomainError(std::string(what) + " must be positive at every sample");
        }
    }
}

namespace {

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : j.items()) {
        if (!ok.contains(item.key())) {
            throw ConfigError("profile: unknown key '" + item.key() + "'");
        }
    }
}

double get_number(const nlohmann::json& j, const char* key, double fallback, bool required) {
    if (!j.contains(key)) {
        if (required) {
            throw ConfigError(std::string("profile: missing field '") + key + "'");
        }
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw ConfigError(std::string("profile: field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

}  // namespace

ParameterProfile ParameterProfile::from_json(const nlohmann::json& j) {
    if (j.is_number()) {
        return constant(j.get<double>());
    }
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw ConfigError("profile: expected an object with a string 'kind'");
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        reject_unknown(j, {"kind", "value", "t_max"});
        return constant(get_number(j, "value", 0.0, true), get_number(j, "t_max", kDefaultTMax, false));
    }
    if (kind == "polynomial") {
        reject_unknown(j, {"kind", "coefficients", "t_max"});
        if (!j.contains("coefficients") || !j.at("coefficients").is_array()) {
            throw ConfigError("profile: polynomial needs a 'coefficients' array");
        }
        return polynomial(j.at("coefficients").get<std::vector<double>>(),
                          get_number(j, "t_max", kDefaultTMax, false));
    }
    if (kind == "sinusoidal") {
        reject_unknown(j, {"kind", "offset", "amplitude", "omega", "phase", "t_max"});
        return sinusoidal(get_number(j, "offset", 0.0, false), get_number(j, "amplitude", 0.0, true),
                          get_number(j, "omega", 0.0, true), get_number(j, "phase", 0.0, false),
                          get_number(j, "t_max", kDefaultTMax, false));
    }
    if (kind == "tabulated") {
        reject_unknown(j, {"kind", "samples"});
        if (!j.contains("samples") || !j.at("samples").is_array()) {
            throw ConfigError("profile: tabulated needs a 'samples' array of [t, value] pairs");
        }
        std::vector<std::pair<double, double>> samples;
        for (const auto& row : j.at("samples")) {
            if (!row.is_array() || row.size() != 2) {
                throw ConfigError("profile: each sample must be a [t, value] pair");
            }
            samples.emplace_back(row[0].get<double>(), row[1].get<double>());
        }
        return tabulated(std::move(samples));
    }
    throw ConfigError("profile: unknown kind '" + kind + "'");
}

nlohmann::json ParameterProfile::to_json() const {
    switch (kind_) {
        case Kind::Constant:
            return {{"kind", "constant"}, {"value", coeffs_[0]}, {"t_max", t_max_}};
        case Kind::Polynomial:
            return {{"kind", "polynomial"}, {"coefficients", coeffs_}, {"t_max", t_max_}};
        case Kind::Sinusoidal:
            return {{"kind", "sinusoidal"}, {"offset", coeffs_[0]}, {"amplitude", coeffs_[1]},
                    {"omega", coeffs_[2]},  {"phase", coeffs_[3]},  {"t_max", t_max_}};
        case Kind::Tabulated: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& [t, v] : samples_) {
                rows.push_back({t, v});
            }
            return {{"kind", "tabulated"}, {"samples", rows}};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kLocalOrder = 16;

}  // namespace

ProfileIntegrals::ProfileIntegrals(ProfilePair params, double horizon) : params_(std::move(params)) {
    const double common_end = std::min(params_.mass.t_max(), params_.force.t_max());
    if (params_.mass.t_min() > 0.0 || params_.force.t_min() > 0.0) {
        throw DomainError("profiles must be defined from t = 0");
    }
    horizon_ = horizon > 0.0 ? horizon : common_end;
    if (horizon_ > common_end) {
        throw DomainError("integration horizon exceeds the profile domain");
    }
    params_.mass.require_positive("mass M(t)");
    step_ = horizon_ / kNodes;
    table_.resize(kNodes + 1);
    for (int k = 0; k < kNodes; ++k) {
        const Values d = local(k, (k + 1) * step_);
        table_[k + 1] = d;
    }
}

double ProfileIntegrals::impulse_local(int node, double t) const {
    const double t0 = node * step_;
    return table_[node].impulse +
           gauss_legendre_integral([&](double s) { return params_.force(s); }, t0, t,
                                   gauss_legendre(kLocalOrder));
}

ProfileIntegrals::Values ProfileIntegrals::local(int node, double t) const {
    // table_[node] must be final for this node; construction fills in order.
    const double t0 = node * step_;
    const Values& base = table_[node];
    Values out = base;
    if (t == t0) {
        return out;
    }
    const auto& rule = gauss_legendre(kLocalOrder);
    const double half = 0.5 * (t - t0);
    const double mid = 0.5 * (t + t0);
    double a = 0.0;
    double g = 0.0;
    double b = 0.0;
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double s = mid + half * rule.nodes[i];
        const double inv_m = 1.0 / params_.mass(s);
        const double impulse = impulse_local(node, s);
        a += rule.weights[i] * inv_m;
        g += rule.weights[i] * params_.force(s);
        b += rule.weights[i] * impulse * inv_m;
        q += rule.weights[i] * impulse * impulse * inv_m;
    }
    out.inv_mass += half * a;
    out.impulse += half * g;
    out.drift += half * b;
    out.energy += half * q;
    return out;
}

ProfileIntegrals::Values ProfileIntegrals::at(double t) const {
    const double slack = 1e-12 * horizon_;
    if (!(t >= -slack && t <= horizon_ + slack)) {
        throw DomainError("time " + std::to_string(t) + " outside integration horizon [0, " +
                          std::to_string(horizon_) + "]");
    }
    t = std::clamp(t, 0.0, horizon_);
    // Nearest node; the local rule runs backwards when t lies below it.
    const int node = std::clamp(static_cast<int>(std::lround(t / step_)), 0, kNodes);
    return local(node, t);
}

ProfileIntegrals::Values ProfileIntegrals::between(double t_a, double t_b) const {
    const Values a = at(t_a);
    const Values b = at(t_b);
    const double d_inv = b.inv_mass - a.inv_mass;
    const double d_drift = b.drift - a.drift;
    Values out;
    out.inv_mass = d_inv;
    out.impulse = b.impulse - a.impulse;
    out.drift = d_drift - a.impulse * d_inv;
    out.energy = (b.energy - a.energy) - 2.0 * a.impulse * d_drift + a.impulse * a.impulse * d_inv;
    return out;
}

}  // namespace linpot
