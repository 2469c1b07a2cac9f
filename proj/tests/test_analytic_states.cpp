#include "doctest.h"

#include <cmath>
#include <numbers>

#include "linpot/analytic_states.hpp"
#include "linpot/errors.hpp"
#include "linpot/oracle.hpp"
#include "linpot/special_functions.hpp"

using namespace linpot;
using std::numbers::pi;

namespace {

ProfilePair constant_pair(double m, double f) {
    return ProfilePair{ParameterProfile::constant(m), ParameterProfile::constant(f)};
}

// Hermite polynomial by the plain three-term recurrence, kept local so the
// mode oracles below do not lean on the library.
double hermite_ref(int n, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// Textbook paraxial Hermite-Gaussian beam with wavenumber 1/hbar, waist
// w0^2 = 2 hbar b, Rayleigh range b, propagation distance t.
cplx paraxial(int n, double b, double hbar, double t, double x) {
    const double w0 = std::sqrt(2.0 * hbar * b);
    const double w = w0 * std::sqrt(1.0 + t * t / (b * b));
    const double inv_r = t / (t * t + b * b);
    const double gouy = std::atan(t / b);
    const double amp = std::pow(2.0 / pi, 0.25) / std::sqrt(std::ldexp(std::tgamma(n + 1.0), n) * w);
    return amp * hermite_ref(n, std::sqrt(2.0) * x / w) *
           std::exp(cplx(-x * x / (w * w), x * x * inv_r / (2.0 * hbar) - (n + 0.5) * gouy));
}

// Free Gaussian by direct numerical superposition of plane waves.
cplx gaussian_by_fourier(const GaussianSpec& s, double v, double hbar, double x) {
    const double dk = 0.002;
    const double reach = 12.0 / s.sigma;
    cplx sum = 0.0;
    for (double k = s.k0 - reach; k <= s.k0 + reach; k += dk) {
        const double q = k - s.k0;
        sum += std::exp(-0.5 * s.sigma * s.sigma * q * q) *
               std::exp(cplx(0.0, k * (x - s.x0) - 0.5 * hbar * k * k * v));
    }
    return sum * dk * std::pow(pi * s.sigma * s.sigma, -0.25) * std::sqrt(2.0 * pi * s.sigma * s.sigma) /
           (2.0 * pi);
}

double sup_diff(const WaveSample& a, const WaveSample& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        m = std::max(m, std::abs(a[j] - b[j]));
    }
    return m;
}

const Grid kGrid{-20, 20, 2048};

}  // namespace

TEST_CASE("stationary Airy state") {
    const AirySpec spec;
    const Grid g{-8, 8, 256};
    const auto psi0 = airy_stationary(spec, 0.0, g);
    CHECK(std::abs(psi0[128] - 0.3550280538878172) < 1e-12);  // x = 0
    const auto psi5 = airy_stationary(spec, 5.0, g);
    for (std::size_t j = 0; j < g.n; ++j) {
        CHECK(std::abs(std::abs(psi5[j]) - std::abs(psi0[j])) < 1e-12);
    }
    AirySpec shifted = spec;
    shifted.e = 1.0;
    const auto e1 = airy_stationary(shifted, 2.0, g);
    // E = beta^3 e / (2m) = 1/2
    CHECK(std::abs(e1[128] - airy_ai(-1.0) * std::exp(cplx(0.0, -1.0))) < 1e-12);
    CHECK_THROWS_AS(airy_stationary(spec, 0.0, Grid{-200, 200, 1024}), RangeError);
}

TEST_CASE("free Airy packet") {
    const AirySpec spec;
    const Grid g{-40, 40, 4096};
    const auto psi = airy_free_packet(spec, 0.0, g);
    std::size_t at = 0;
    for (std::size_t j = 0; j < g.n; ++j) {
        if (std::abs(psi[j]) > std::abs(psi[at])) at = j;
    }
    // first maximum of Ai sits at argument -1.018792971647471, i.e. x = +1.0188 for Ai(-x)
    CHECK(std::abs(g.x(at) - 1.018792971647471) <= g.dx());

    AirySpec moving{std::cbrt(2.0), 1.3, 0.4, 0.6, 1.0};
    for (double t : {0.5, 1.7}) {
        const double shift = std::pow(moving.beta, 3) * t * t / (4 * moving.m * moving.m) + moving.c * t;
        for (double x = -12.0; x < 12.0; x += 0.37) {
            CHECK(std::abs(std::abs(airy_free_value(moving, t, x - shift)) -
                           std::abs(airy_free_value(moving, 0.0, x))) < 1e-10);
        }
    }
}

TEST_CASE("general Airy packet reductions") {
    const AirySpec spec{1.2, 1.0, 0.5, 0.3, 1.0};
    const Grid g{-30, 30, 2048};
    for (double t : {0.0, 0.8, 2.1}) {
        CHECK(sup_diff(airy_general_packet(spec, constant_pair(1.0, 0.0), t, g), airy_free_packet(spec, t, g)) <
              1e-10);
    }
    const AirySpec still{1.2, 1.0, 0.5, 0.0, 1.0};
    const auto general = airy_general_packet(still, constant_pair(1.0, still.force()), 0.0, g);
    const auto stationary = airy_stationary(still, 0.0, g);
    for (std::size_t j = 0; j < g.n; ++j) {
        CHECK(std::abs(std::abs(general[j]) - std::abs(stationary[j])) < 1e-10);
    }

    // M = 1 + t, F = 0: argument equals the constant-mass one at tau = ln(1 + t)
    const AirySpec unit{1.0, 1.0, 0.25, 0.4, 1.0};
    const ProfilePair growing{ParameterProfile::polynomial({1.0, 1.0}), ParameterProfile::constant(0.0)};
    const ClassicalPath still_path(growing, 0.0, 0.0);
    for (double t : {0.3, 1.0, 2.5}) {
        const double tau = std::log1p(t);
        for (double x : {-3.0, 0.0, 2.2}) {
            const double expected = -(x + unit.e + tau * tau / 4.0 + unit.c * tau);
            CHECK(std::abs(airy_general_argument(unit, still_path, t, x) - expected) < 1e-8);
        }
    }
}

TEST_CASE("free Gaussian against plane-wave superposition") {
    const GaussianSpec s{0.5, 1.2, 0.8};
    for (double hbar : {1.0, 0.4}) {
        for (double v : {0.0, 0.7, 2.0}) {
            for (double x : {-2.0, 0.1, 1.9, 3.5}) {
                CHECK(std::abs(free_gaussian_value(s, v, hbar, x) - gaussian_by_fourier(s, v, hbar, x)) < 1e-10);
            }
        }
    }
}

TEST_CASE("ground mode closed form") {
    const double hbar = 0.7, b = 1.3;
    const ModeSpec spec{0, b, 0.0, ClassicalPath(constant_pair(1, 0), 0, 0), hbar};
    const auto psi = hg_mode(spec, 0.0, kGrid);
    for (std::size_t j = 0; j < kGrid.n; j += 7) {
        const double x = kGrid.x(j);
        CHECK(std::abs(psi[j] - std::pow(pi * hbar * b, -0.25) * std::exp(-x * x / (2 * hbar * b))) < 1e-14);
    }
}

TEST_CASE("modes are orthonormal under a force") {
    const ModeSpec base{0, 1.0, 0.3, ClassicalPath(constant_pair(1, 1), 0.2, -0.4), 1.0};
    std::vector<WaveSample> modes;
    for (int n = 0; n <= 10; ++n) {
        ModeSpec s = base;
        s.n = n;
        modes.push_back(hg_mode(s, 0.7, kGrid));
    }
    for (int m = 0; m <= 10; ++m) {
        for (int n = m; n <= 10; ++n) {
            const cplx o = overlap(modes[m], modes[n]);
            CHECK(std::abs(o - (m == n ? 1.0 : 0.0)) < 1e-8);
        }
    }
    const auto family = hg_mode_family(base, 10, 0.7, kGrid);
    for (int n = 0; n <= 10; ++n) {
        double worst = 0.0;
        for (std::size_t j = 0; j < kGrid.n; ++j) {
            worst = std::max(worst, std::abs(family[n][j] - modes[n][j]));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("Gouy parameters") {
    const double b = 1.7;
    auto g0 = gouy_from_v(b, 0.0, 1.0);
    CHECK(g0.chi == 0.0);
    CHECK(g0.gamma == doctest::Approx(std::sqrt(b)));
    CHECK(g0.inv_s == 0.0);
    auto g1 = gouy_from_v(b, b, 1.0);
    CHECK(g1.chi == doctest::Approx(pi / 4));
    CHECK(g1.gamma * g1.gamma == doctest::Approx(2 * b));
    CHECK(g1.inv_s == doctest::Approx(1.0 / (2 * b)));
    CHECK(gouy_from_v(b, 1e9, 1.0).chi == doctest::Approx(pi / 2));
    CHECK(gouy_from_v(b, -3.0, 1.0).chi < 0.0);
    for (double hbar : {1.0, 0.3}) {
        for (double v : {-2.0, 0.4, 5.0}) {
            const auto g = gouy_from_v(b, v, hbar);
            const cplx lhs(1.0 / (g.gamma * g.gamma), -g.inv_s / hbar);
            CHECK(std::abs(lhs - 1.0 / (hbar * cplx(b, v))) < 1e-12);
        }
    }
    const ModeSpec spec{2, b, 0.25, ClassicalPath(constant_pair(2.0, 0), 0, 0), 1.0};
    CHECK(gouy_parameters(spec, 1.5).chi == doctest::Approx(std::atan2(1.5 / 2.0 + 0.25, b)));
}

TEST_CASE("Gouy rewriting agrees with the direct form") {
    const ProfilePair forced{ParameterProfile::polynomial({1.0, 0.5}), ParameterProfile::sinusoidal(1.0, 0.5, 2.0)};
    for (int n : {0, 1, 2, 3, 5, 10}) {
        const ModeSpec spec{n, 1.0, 0.2, ClassicalPath(forced, 0.3, 0.1), 1.0};
        for (double t : {0.0, 0.3, 0.7, 1.0}) {
            CHECK(sup_diff(hg_mode_gouy(spec, t, kGrid), hg_mode(spec, t, kGrid)) < 1e-10);
        }
    }
}

TEST_CASE("free modes match paraxial Hermite-Gaussian beams") {
    for (double hbar : {1.0, 0.5}) {
        for (int n : {0, 1, 4, 7}) {
            const ModeSpec spec{n, 1.2, 0.0, ClassicalPath(constant_pair(1, 0), 0, 0), hbar};
            for (double t : {0.0, 0.6, 2.0}) {
                const auto psi = hg_mode(spec, t, kGrid);
                double worst = 0.0;
                for (std::size_t j = 0; j < kGrid.n; ++j) {
                    worst = std::max(worst, std::abs(psi[j] - paraxial(n, 1.2, hbar, t, kGrid.x(j))));
                }
                CHECK(worst < 1e-8);
            }
        }
    }
}

TEST_CASE("mode errors") {
    ModeSpec spec{10, 1.0, 0.0, ClassicalPath(constant_pair(1, 0), 0, 0), 1.0};
    CHECK_THROWS_AS(hg_mode(spec, 0.0, Grid{-2, 2, 64}), CoverageError);
    spec.n = 513;
    CHECK_THROWS_AS(hg_mode(spec, 0.0, kGrid), RangeError);
    spec.n = 0;
    spec.b = -1.0;
    CHECK_THROWS_AS(hg_mode(spec, 0.0, kGrid), DomainError);
}
