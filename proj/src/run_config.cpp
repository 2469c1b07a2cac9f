#include "linpot/run_config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "linpot/errors.hpp"

namespace linpot {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!j.is_object()) {
        throw ConfigError(path + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            throw ConfigError(path + "/" + key + ": unknown key");
        }
    }
}

double number(const json& j, const char* key, const std::string& path, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw ConfigError(path + "/" + key + ": expected a number");
    }
    return v.get<double>();
}

int integer(const json& j, const char* key, const std::string& path, int fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(path + "/" + key + ": expected an integer");
    }
    return v.get<int>();
}

std::string text(const json& j, const char* key, const std::string& path, const std::string& fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_string()) {
        throw ConfigError(path + "/" + key + ": expected a string");
    }
    return v.get<std::string>();
}

template <class T>
std::vector<T> list(const json& j, const char* key, const std::string& path, std::vector<T> fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_array()) {
        throw ConfigError(path + "/" + key + ": expected an array");
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const bool ok = std::is_integral_v<T> ? v[i].is_number_integer() : v[i].is_number();
        if (!ok) {
            throw ConfigError(path + "/" + key + "/" + std::to_string(i) + ": expected a number");
        }
        out.push_back(v[i].get<T>());
    }
    return out;
}

ParameterProfile profile(const json& j, const char* key, ParameterProfile fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    try {
        return ParameterProfile::from_json(j.at(key));
    } catch (const Error& e) {
        throw ConfigError(std::string("/") + key + ": " + e.what());
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
    reject_unknown(j, {"hbar", "mass", "force", "grid", "state", "times", "out", "plot", "airy_form",
                       "modes", "kernel", "evolve", "criteria"},
                   "");
    RunConfig c;
    c.hbar = number(j, "hbar", "", c.hbar);
    c.params.mass = profile(j, "mass", c.params.mass);
    c.params.force = profile(j, "force", c.params.force);
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        reject_unknown(g, {"xmin", "xmax", "n"}, "/grid");
        c.grid.xmin = number(g, "xmin", "/grid", c.grid.xmin);
        c.grid.xmax = number(g, "xmax", "/grid", c.grid.xmax);
        const int n = integer(g, "n", "/grid", static_cast<int>(c.grid.n));
        require(n > 0, "/grid/n: must be positive");
        c.grid.n = static_cast<std::size_t>(n);
    }
    if (j.contains("state")) {
        const auto& s = j.at("state");
        reject_unknown(s, {"kind", "beta", "m", "e", "c", "d", "x0", "k0", "sigma", "n", "b", "p"},
                       "/state");
        auto& st = c.state;
        st.kind = text(s, "kind", "/state", st.kind);
        st.airy.beta = number(s, "beta", "/state", st.airy.beta);
        st.airy.m = number(s, "m", "/state", st.airy.m);
        st.airy.e = number(s, "e", "/state", st.airy.e);
        st.c = number(s, "c", "/state", st.c);
        st.airy.c = st.c;
        st.d = number(s, "d", "/state", st.d);
        st.gaussian.x0 = number(s, "x0", "/state", st.gaussian.x0);
        st.gaussian.k0 = number(s, "k0", "/state", st.gaussian.k0);
        st.gaussian.sigma = number(s, "sigma", "/state", st.gaussian.sigma);
        st.n = integer(s, "n", "/state", st.n);
        st.b = number(s, "b", "/state", st.b);
        st.p = number(s, "p", "/state", st.p);
    }
    c.times = list<double>(j, "times", "", c.times);
    c.out = text(j, "out", "", c.out);
    if (j.contains("plot")) {
        require(j.at("plot").is_boolean(), "/plot: expected true or false");
        c.plot = j.at("plot").get<bool>();
    }
    c.airy_form = text(j, "airy_form", "", c.airy_form);
    c.modes = list<int>(j, "modes", "", c.modes);
    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        reject_unknown(k, {"t_a", "t_b", "x_a", "x_b"}, "/kernel");
        c.kernel.t_a = number(k, "t_a", "/kernel", c.kernel.t_a);
        c.kernel.t_b = number(k, "t_b", "/kernel", c.kernel.t_b);
        c.kernel.x_a = list<double>(k, "x_a", "/kernel", c.kernel.x_a);
        c.kernel.x_b = list<double>(k, "x_b", "/kernel", c.kernel.x_b);
    }
    if (j.contains("evolve")) {
        const auto& e = j.at("evolve");
        reject_unknown(e, {"t0", "method", "dt"}, "/evolve");
        c.evolve.t0 = number(e, "t0", "/evolve", c.evolve.t0);
        c.evolve.method = text(e, "method", "/evolve", c.evolve.method);
        c.evolve.dt = number(e, "dt", "/evolve", c.evolve.dt);
    }
    c.criteria = list<int>(j, "criteria", "", c.criteria);
    return c;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < content.size(); ++i) {
            if (content[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ConfigError(path + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": JSON syntax error");
    }
    try {
        return from_json(j);
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

json RunConfig::to_json() const {
    const auto& st = state;
    return json{
        {"hbar", hbar},
        {"mass", params.mass.to_json()},
        {"force", params.force.to_json()},
        {"grid", {{"xmin", grid.xmin}, {"xmax", grid.xmax}, {"n", grid.n}}},
        {"state",
         {{"kind", st.kind}, {"beta", st.airy.beta}, {"m", st.airy.m}, {"e", st.airy.e}, {"c", st.c},
          {"d", st.d}, {"x0", st.gaussian.x0}, {"k0", st.gaussian.k0}, {"sigma", st.gaussian.sigma},
          {"n", st.n}, {"b", st.b}, {"p", st.p}}},
        {"times", times},
        {"out", out},
        {"plot", plot},
        {"airy_form", airy_form},
        {"modes", modes},
        {"kernel", {{"t_a", kernel.t_a}, {"t_b", kernel.t_b}, {"x_a", kernel.x_a}, {"x_b", kernel.x_b}}},
        {"evolve", {{"t0", evolve.t0}, {"method", evolve.method}, {"dt", evolve.dt}}},
        {"criteria", criteria},
    };
}

void RunConfig::validate() const {
    require(hbar > 0.0 && std::isfinite(hbar), "/hbar: must be positive");
    try {
        grid.validate();
    } catch (const Error& e) {
        throw ConfigError(std::string("/grid: ") + e.what());
    }
    require(params.mass.t_min() <= 0.0 && params.force.t_min() <= 0.0,
            "/mass, /force: profiles must be defined from t = 0");
    try {
        params.mass.require_positive("mass");
    } catch (const Error& e) {
        throw ConfigError(std::string("/mass: ") + e.what());
    }
    const double t_end = std::min(params.mass.t_max(), params.force.t_max());
    const auto& st = state;
    require(st.kind == "airy" || st.kind == "hg" || st.kind == "gaussian",
            "/state/kind: expected airy, hg or gaussian");
    require(st.airy.beta > 0.0 && st.airy.m > 0.0, "/state: beta and m must be positive");
    require(std::isfinite(st.airy.e) && std::isfinite(st.c) && std::isfinite(st.d),
            "/state: e, c and d must be finite");
    require(st.gaussian.sigma > 0.0, "/state/sigma: must be positive");
    require(st.n >= 0 && st.n <= 512, "/state/n: must lie in [0, 512]");
    require(st.b > 0.0 && std::isfinite(st.p), "/state: b must be positive and p finite");
    require(!times.empty(), "/times: need at least one time");
    for (std::size_t i = 0; i < times.size(); ++i) {
        require(times[i] >= 0.0 && times[i] <= t_end,
                "/times/" + std::to_string(i) + ": outside the profile domain");
    }
    require(airy_form == "general" || airy_form == "free" || airy_form == "stationary",
            "/airy_form: expected general, free or stationary");
    for (std::size_t i = 0; i < modes.size(); ++i) {
        require(modes[i] >= 0 && modes[i] <= 512, "/modes/" + std::to_string(i) + ": must lie in [0, 512]");
    }
    require(!kernel.x_a.empty() && !kernel.x_b.empty(), "/kernel: x_a and x_b must be non-empty");
    require(kernel.t_a >= 0.0 && kernel.t_b <= t_end, "/kernel: times outside the profile domain");
    require(evolve.method == "ssf" || evolve.method == "kernel", "/evolve/method: expected ssf or kernel");
    require(evolve.dt > 0.0, "/evolve/dt: must be positive");
    require(evolve.t0 >= 0.0 && evolve.t0 <= t_end, "/evolve/t0: outside the profile domain");
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        require(criteria[i] >= 1 && criteria[i] <= 10,
                "/criteria/" + std::to_string(i) + ": must lie in 1..10");
    }
}

}  // namespace linpot
