#include "doctest.h"

#include <cmath>

#include "linpot/classical.hpp"
#include "linpot/errors.hpp"

using namespace linpot;

namespace {

ProfilePair pair(double m, double f) {
    return ProfilePair{ParameterProfile::constant(m), ParameterProfile::constant(f)};
}

}  // namespace

TEST_CASE("trajectory examples") {
    auto a = ClassicalPath(pair(1, 1), 0, 0).trajectory(2.0);
    CHECK(a.x == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(a.xdot == doctest::Approx(2.0).epsilon(1e-14));

    auto b = ClassicalPath(pair(1, 0), 1, 3).trajectory(5.0);
    CHECK(b.x == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(b.xdot == doctest::Approx(1.0).epsilon(1e-14));

    const ProfilePair varying{ParameterProfile::polynomial({1.0, 1.0}), ParameterProfile::constant(0.0)};
    auto c = ClassicalPath(varying, 1, 0).trajectory(1.0);
    CHECK(c.x == doctest::Approx(std::log(2.0)).epsilon(1e-13));
    CHECK(c.xdot == doctest::Approx(0.5).epsilon(1e-14));

    CHECK(ClassicalPath(pair(1, 1), 0.4, -2.5).trajectory(0.0).x == -2.5);
    CHECK_THROWS_AS(ClassicalPath(pair(1, 1), 0, 0, 3.0).trajectory(3.5), DomainError);
}

TEST_CASE("action phase examples") {
    CHECK(ClassicalPath(pair(1, 0), 1, 0).action_phase(4.0) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(ClassicalPath(pair(1, 1), 0, 0).action_phase(1.0) == doctest::Approx(-1.0 / 6.0).epsilon(1e-13));
    CHECK(ClassicalPath(pair(2, 0), 1, 0).action_phase(2.0) == doctest::Approx(-0.5).epsilon(1e-13));
}

TEST_CASE("equation of motion and first integral") {
    const ProfilePair p{ParameterProfile::polynomial({1.0, 0.5, 0.1}),
                        ParameterProfile::sinusoidal(0.3, 1.0, 2.0, 0.4)};
    const ClassicalPath path(p, 0.7, -0.2, 5.0);
    const double h = 1e-4;
    double prev_xi = path.action_phase(0.0);
    for (double t = 0.2; t < 4.8; t += 0.37) {
        // M xdot - int F - C = 0, with int F = 0.3 t - (cos(2t + 0.4) - cos(0.4))/2
        const double impulse = 0.3 * t - 0.5 * (std::cos(2 * t + 0.4) - std::cos(0.4));
        CHECK(std::abs(p.mass(t) * path.trajectory(t).xdot - impulse - 0.7) < 1e-12);
        // d/dt (M xdot) = F by central differences
        const double ddt = (p.mass(t + h) * path.trajectory(t + h).xdot -
                            p.mass(t - h) * path.trajectory(t - h).xdot) / (2 * h);
        CHECK(std::abs(ddt - p.force(t)) < 1e-6);
        // dx/dt from x itself agrees with the first-integral velocity
        const double dxdt = (path.trajectory(t + h).x - path.trajectory(t - h).x) / (2 * h);
        CHECK(std::abs(dxdt - path.trajectory(t).xdot) < 1e-7);
        const double xi = path.action_phase(t);
        CHECK(xi <= prev_xi);
        prev_xi = xi;
    }
}

TEST_CASE("Galilean family is linear in C and D") {
    const ProfilePair p{ParameterProfile::polynomial({2.0, 1.0}), ParameterProfile::constant(0.0)};
    const ClassicalPath base(p, 0, 0);
    const ClassicalPath moved(p, 1.5, -0.75);
    for (double t : {0.0, 0.5, 2.0, 7.0}) {
        const double a = std::log1p(t / 2.0);  // int dt/(2 + t)
        CHECK(moved.trajectory(t).x - base.trajectory(t).x == doctest::Approx(1.5 * a - 0.75).epsilon(1e-13));
        CHECK(moved.inverse_mass_integral(t) == doctest::Approx(a).epsilon(1e-13));
    }
}

TEST_CASE("reparameterized time") {
    CHECK(reparam_time(ParameterProfile::constant(2.5), 2.5, 3.0) == 3.0);
    CHECK(reparam_time(ParameterProfile::polynomial({2.0, 2.0}), 2.0, 1.0) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));

    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i <= 40; ++i) {
        const double t = 0.1 * i;
        samples.emplace_back(t, 1.0 + 0.5 * std::sin(t));
    }
    const auto tab = ParameterProfile::tabulated(samples);
    // refined Simpson oracle on the spline itself
    const int n = 400000;
    const double T = 3.3;
    const double h = T / n;
    double s = 1.0 / tab(0.0) + 1.0 / tab(T);
    for (int i = 1; i < n; ++i) {
        s += (i % 2 ? 4.0 : 2.0) / tab(i * h);
    }
    CHECK(std::abs(reparam_time(tab, 1.0, T) - s * h / 3.0) < 1e-10);
    CHECK(reparam_time(tab, 1.0, 1.0) < reparam_time(tab, 1.0, 1.1));
    CHECK_THROWS_AS(reparam_time(tab, 0.0, 1.0), DomainError);
}
