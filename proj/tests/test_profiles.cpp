#include "doctest.h"

#include <cmath>
#include <numbers>

#include "linpot/errors.hpp"
#include "linpot/profiles.hpp"
#include "linpot/quadrature.hpp"

using namespace linpot;

namespace {

// Composite Simpson with a fixed, fine partition.
template <class F>
double simpson(const F& f, double a, double b, int panels = 20000) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("profile evaluation") {
    CHECK(ParameterProfile::constant(2.0)(0.7) == 2.0);
    CHECK(ParameterProfile::polynomial({1.0, 1.0})(1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ParameterProfile::sinusoidal(0.5, 2.0, 3.0, 0.1)(0.4) ==
          doctest::Approx(0.5 + 2.0 * std::sin(1.2 + 0.1)).epsilon(1e-15));

    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        samples.emplace_back(t, std::sin(t));
    }
    const auto tab = ParameterProfile::tabulated(samples);
    CHECK(std::abs(tab(0.5) - std::sin(0.5)) < 1e-8);
    CHECK(std::abs(tab(0.537) - std::sin(0.537)) < 1e-8);
    CHECK(tab.t_max() == 1.0);
}

TEST_CASE("profile domain and construction errors") {
    const auto c = ParameterProfile::constant(1.0, 5.0);
    CHECK_THROWS_AS(c(5.5), DomainError);
    CHECK_THROWS_AS(c(-0.1), DomainError);
    CHECK_THROWS_AS(ParameterProfile::tabulated({{0, 1}, {1, 1}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(ParameterProfile::tabulated({{0, 1}, {1, 1}, {1, 1}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(ParameterProfile::polynomial({1.0, -1.0}, 5.0).require_positive("mass"), DomainError);
    CHECK_NOTHROW(ParameterProfile::polynomial({1.0, 1.0}).require_positive("mass"));
}

TEST_CASE("profile JSON") {
    const auto p = ParameterProfile::from_json(nlohmann::json::parse(
        R"({"kind": "sinusoidal", "offset": 1, "amplitude": 0.5, "omega": 2, "phase": 0.3, "t_max": 9})"));
    CHECK(p(1.0) == doctest::Approx(1.0 + 0.5 * std::sin(2.3)));
    CHECK(p.t_max() == 9.0);
    const auto q = ParameterProfile::from_json(p.to_json());
    CHECK(q(2.2) == p(2.2));
    CHECK(ParameterProfile::from_json(3.5)(1.0) == 3.5);
    CHECK_THROWS_AS(ParameterProfile::from_json(nlohmann::json::parse(R"({"kind": "constant", "value": 1, "x": 2})")),
                    ConfigError);
    CHECK_THROWS_AS(ParameterProfile::from_json(nlohmann::json::parse(R"({"kind": "cubic"})")), ConfigError);
}

TEST_CASE("adaptive Simpson") {
    CHECK(std::abs(integrate([](double t) { return t; }, 0.0, 1.0) - 0.5) < 1e-12);
    CHECK(std::abs(integrate([](double t) { return 1.0 / (1.0 + t); }, 0.0, 1.0) - std::log(2.0)) < 1e-12);
    CHECK(std::abs(integrate([](double t) { return std::sin(10 * t); }, 0.0, 1.0) - (1 - std::cos(10.0)) / 10) <
          1e-10);
    CHECK(integrate([](double) { return 3.25; }, -1.0, 2.0) == doctest::Approx(9.75).epsilon(1e-15));

    auto f = [](double t) { return std::exp(-t) * std::cos(3 * t); };
    for (double b : {0.3, 1.1, 2.0}) {
        const double whole = integrate(f, 0.0, 2.5);
        const double split = integrate(f, 0.0, b) + integrate(f, b, 2.5);
        CHECK(std::abs(whole - split) <= 2e-12);
    }
    CHECK_THROWS_AS(integrate([](double t) { return std::sqrt(t); }, 0.0, 1.0, 1e-15, 4), AccuracyError);
    CHECK_THROWS_AS(integrate([](double t) { return t; }, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate([](double t) { return t; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("Gauss-Legendre rules") {
    for (int n : {1, 4, 16, 33}) {
        const auto& rule = gauss_legendre(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        const int deg = 2 * n - 1;
        const double exact = (deg % 2 == 1) ? 2.0 / deg : 0.0;  // int_{-1}^{1} x^{2n-2}
        const double got = gauss_legendre_integral(
            [deg](double x) { return std::pow(x, deg - 1); }, -1.0, 1.0, rule);
        CHECK(got == doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("profile integrals") {
    const ProfilePair p{ParameterProfile::polynomial({1.0, 1.0}), ParameterProfile::sinusoidal(0.0, 1.0, 1.0)};
    ProfileIntegrals ints(p, 4.0);
    auto G = [](double t) { return 1.0 - std::cos(t); };
    for (double t : {0.0, 0.37, 1.5, 3.99, 4.0}) {
        const auto v = ints.at(t);
        CHECK(v.inv_mass == doctest::Approx(std::log1p(t)).epsilon(1e-13));
        CHECK(v.impulse == doctest::Approx(G(t)).epsilon(1e-13));
        const double drift = simpson([&](double s) { return G(s) / (1.0 + s); }, 0.0, t);
        const double energy = simpson([&](double s) { return G(s) * G(s) / (1.0 + s); }, 0.0, t);
        CHECK(std::abs(v.drift - drift) < 1e-12);
        CHECK(std::abs(v.energy - energy) < 1e-12);
    }
    // between(): G measured from t_a
    const double ta = 0.8, tb = 2.9;
    const auto d = ints.between(ta, tb);
    auto Gab = [&](double s) { return G(s) - G(ta); };
    CHECK(std::abs(d.inv_mass - std::log((1 + tb) / (1 + ta))) < 1e-13);
    CHECK(std::abs(d.impulse - Gab(tb)) < 1e-13);
    CHECK(std::abs(d.drift - simpson([&](double s) { return Gab(s) / (1 + s); }, ta, tb)) < 1e-12);
    CHECK(std::abs(d.energy - simpson([&](double s) { return Gab(s) * Gab(s) / (1 + s); }, ta, tb)) < 1e-12);
    CHECK_THROWS_AS(ints.at(4.5), DomainError);
}
