#include "doctest.h"

#include <cmath>

#include "linpot/analytic_states.hpp"
#include "linpot/errors.hpp"
#include "linpot/oracle.hpp"

using namespace linpot;

namespace {

ProfilePair constant_pair(double m, double f) {
    return ProfilePair{ParameterProfile::constant(m), ParameterProfile::constant(f)};
}

const Grid kGrid{-30, 30, 2048};

WaveSample gaussian(double k0 = 0.0, double sigma = 1.0) {
    return free_gaussian(GaussianSpec{0.0, k0, sigma}, 0.0, 0.0, 1.0, kGrid);
}

}  // namespace

TEST_CASE("free Gaussian matches the closed form") {
    const GaussianSpec s{-1.0, 0.8, 1.2};
    const auto psi0 = free_gaussian(s, 0.0, 0.0, 1.0, kGrid);
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    const auto psi1 = ssf_propagate(constant_pair(1, 0), psi0, 1.0, cfg);
    CHECK(psi1.t() == 1.0);
    CHECK(l2_distance(psi1, free_gaussian(s, 1.0, 1.0, 1.0, kGrid)) < 1e-8);
}

TEST_CASE("Ehrenfest drift under a constant force") {
    const auto psi0 = gaussian();
    for (double t : {0.5, 1.0, 2.0}) {
        const auto psi = ssf_propagate(constant_pair(1, 1), psi0, t);
        CHECK(std::abs(mean_position(psi) - mean_position(psi0) - 0.5 * t * t) < 1e-8);
    }
    // M = 2: acceleration F/M
    const auto heavy = ssf_propagate(constant_pair(2, 1), psi0, 2.0);
    CHECK(std::abs(mean_position(heavy) - 1.0) < 1e-8);
}

TEST_CASE("zero steps, norms and overlaps") {
    const auto psi0 = gaussian(0.4);
    const auto same = ssf_propagate(constant_pair(1, 1), psi0, 0.0);
    for (std::size_t j = 0; j < psi0.size(); ++j) {
        CHECK(same[j] == psi0[j]);
    }
    const ModeSpec mode{0, 1.0, 0.0, ClassicalPath(constant_pair(1, 0), 0, 0), 1.0};
    CHECK(norm(hg_mode(mode, 0.0, kGrid)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(l2_distance(psi0, psi0) == 0.0);
    ModeSpec m3 = mode;
    m3.n = 3;
    CHECK(std::abs(overlap(hg_mode(mode, 0.0, kGrid), hg_mode(m3, 0.0, kGrid))) < 1e-12);
    CHECK(std::abs(overlap(psi0, psi0) - 1.0) < 1e-12);
    const auto coarse = free_gaussian(GaussianSpec{}, 0.0, 0.0, 1.0, Grid{-30, 30, 1024});
    CHECK_THROWS_AS(l2_distance(psi0, coarse), ShapeError);
}

TEST_CASE("each step is unitary") {
    const ProfilePair p{ParameterProfile::polynomial({1.0, 0.5}), ParameterProfile::sinusoidal(0.0, 2.0, 3.0)};
    const SplitStepPropagator prop(p, kGrid, 1.0);
    const auto psi0 = gaussian(1.0);
    std::vector<cplx> v(psi0.values().begin(), psi0.values().end());
    double prev = norm(psi0);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        prop.step(v, k * 1e-3, 1e-3);
        const double now = norm(psi0.with_values(v));
        worst = std::max(worst, std::abs(now - prev));
        prev = now;
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("time reversal") {
    const ProfilePair p{ParameterProfile::polynomial({1.0, 0.5}), ParameterProfile::sinusoidal(0.2, 1.0, 2.0)};
    const auto psi0 = gaussian(0.5, 1.5);
    const auto there = ssf_propagate(p, psi0, 1.0);
    const auto back = ssf_propagate(p, there, 0.0);
    CHECK(back.t() == 0.0);
    CHECK(l2_distance(back, psi0) < 1e-10);
}

TEST_CASE("second-order convergence") {
    const ProfilePair p{ParameterProfile::polynomial({1.0, 0.5}), ParameterProfile::sinusoidal(0.0, 1.5, 2.0)};
    const auto psi0 = gaussian(0.5, 1.5);
    auto run = [&](double dt) {
        IntegratorConfig c;
        c.dt = dt;
        return ssf_propagate(p, psi0, 1.0, c);
    };
    const auto reference = run(1e-3 / 16);
    const double e1 = l2_distance(run(1e-2), reference);
    const double e2 = l2_distance(run(5e-3), reference);
    const double e3 = l2_distance(run(2.5e-3), reference);
    CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(std::log2(e2 / e3) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("integrator errors") {
    const Grid small{-6, 6, 256};
    const auto psi = free_gaussian(GaussianSpec{}, 0.0, 0.0, 1.0, small);
    CHECK_THROWS_AS(ssf_propagate(constant_pair(1, 5), psi, 3.0), BoundaryError);
    const auto edge = free_gaussian(GaussianSpec{5.5, 0, 1}, 0.0, 0.0, 1.0, small);
    CHECK_THROWS_AS(ssf_propagate(constant_pair(1, 0), edge, 0.1), BoundaryError);
    const auto fast = free_gaussian(GaussianSpec{0, 15.0, 0.7}, 0.0, 0.0, 1.0, kGrid);
    IntegratorConfig coarse;
    coarse.dt = 0.05;
    CHECK_THROWS_AS(ssf_propagate(constant_pair(1, 0), fast, 0.2, coarse), ResolutionError);
    coarse.dt = -1.0;
    CHECK_THROWS_AS(ssf_propagate(constant_pair(1, 0), psi, 0.2, coarse), DomainError);
}
