#include "doctest.h"

#include <cmath>
#include <sstream>

#include "linpot/errors.hpp"
#include "linpot/oracle.hpp"
#include "linpot/spectral.hpp"
#include "linpot/wave.hpp"

using namespace linpot;

namespace {

WaveSample sampled(const Grid& g, auto f) {
    std::vector<cplx> v(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        v[j] = f(g.x(j));
    }
    return WaveSample(g, std::move(v), 0.0, 1.0);
}

double max_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        m = std::max(m, std::abs(a[j] - b[j]));
    }
    return m;
}

}  // namespace

TEST_CASE("grid validation and windows") {
    CHECK_NOTHROW(Grid{-1, 1, 16}.validate());
    CHECK_THROWS_AS((Grid{-1, 1, 1000}.validate()), ShapeError);
    CHECK_THROWS_AS((Grid{-1, 1, 8}.validate()), ShapeError);
    CHECK_THROWS_AS((Grid{1, -1, 64}.validate()), ShapeError);
    const Grid g{-10, 10, 1024};
    CHECK(g.dx() == doctest::Approx(20.0 / 1024));
    CHECK(g.points().size() == 1024);
    const Window w = central_window(g, 0.8);
    CHECK(w.size() >= 818);
    CHECK(w.size() <= 821);
    CHECK(w.first + w.last == doctest::Approx(1024.0).epsilon(0.002));
    CHECK_THROWS_AS(central_window(g, 0.0), ShapeError);
    CHECK_THROWS_AS(WaveSample(g, std::vector<cplx>(10), 0.0, 1.0), ShapeError);
}

TEST_CASE("CSV round trip is bit exact") {
    const Grid g{-3, 3, 32};
    std::vector<cplx> v(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        v[j] = cplx(std::sin(1.0 + j) / 3.0, std::exp(-0.7 * j));
    }
    v[3] = cplx(4.9e-320, -2.2e-310);  // subnormal
    v[5] = cplx(1.0 / 3.0, 0.0);
    const WaveSample psi(g, v, 0.25, 1.0);
    std::stringstream s;
    write_wave_csv(s, psi);
    CHECK(s.str().rfind("x,re,im,abs2\n", 0) == 0);
    const auto rows = read_wave_csv(s);
    REQUIRE(rows.size() == g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        CHECK(rows[j].x == g.x(j));
        CHECK(rows[j].re == v[j].real());
        CHECK(rows[j].im == v[j].imag());
        CHECK(rows[j].abs2 == std::norm(v[j]));
    }
    std::stringstream bad("x,re,im\n1,2,3\n");
    CHECK_THROWS_AS(read_wave_csv(bad), ShapeError);
}

TEST_CASE("FFT round trip and wavenumbers") {
    const Grid g{-5, 5, 64};
    const auto psi = sampled(g, [](double x) { return cplx(std::cos(x), x * x); });
    const auto back = spectral::inverse(spectral::forward(psi.values()));
    CHECK(max_diff(back, psi.values()) < 1e-12);
    const auto k = spectral::wavenumbers(g);
    CHECK(k[0] == 0.0);
    CHECK(k[1] == doctest::Approx(2 * M_PI / 10.0));
    CHECK(k[32] == doctest::Approx(-M_PI / g.dx()));
    CHECK(k[63] == doctest::Approx(-2 * M_PI / 10.0));
}

TEST_CASE("spectral derivative, shift and interpolation of a Gaussian") {
    const Grid g{-16, 16, 512};
    auto f = [](double x) { return cplx(std::exp(-x * x), 0.5 * std::exp(-(x - 1) * (x - 1))); };
    const auto psi = sampled(g, f);

    const auto d2 = spectral::second_derivative(psi.values(), g);
    const auto exact = sampled(g, [](double x) {
        const double y = x - 1;
        return cplx((4 * x * x - 2) * std::exp(-x * x), 0.5 * (4 * y * y - 2) * std::exp(-y * y));
    });
    CHECK(max_diff(d2, exact.values()) < 1e-10);

    const auto moved = spectral::shift(psi.values(), g, 1.2345);
    CHECK(max_diff(moved, sampled(g, [&](double x) { return f(x - 1.2345); }).values()) < 1e-12);

    // whole-cell shifts are rolls
    const auto rolled = spectral::shift(psi.values(), g, 3 * g.dx());
    for (std::size_t j = 3; j < g.n; ++j) {
        CHECK(std::abs(rolled[j] - psi[j - 3]) < 1e-14);
    }

    const std::vector<double> xs{-2.01, -0.333, 0.0, 0.7071, 3.14159};
    const auto at = spectral::interpolate(psi.values(), g, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(std::abs(at[i] - f(xs[i])) < 1e-13);
    }
}

TEST_CASE("plateau taper") {
    const Grid g{-10, 10, 1024};
    const auto w = spectral::plateau_taper(g, 0.8);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double x = g.x(j);
        CHECK(w[j] >= 0.0);
        CHECK(w[j] <= 1.0);
        if (std::abs(x) <= 7.99) {
            CHECK(w[j] == 1.0);
        }
        if (std::abs(x) >= 9.61) {
            CHECK(w[j] == 0.0);
        }
    }
}

TEST_CASE("tail mass and norms") {
    const Grid g{-20, 20, 1024};
    const auto narrow = sampled(g, [](double x) { return cplx(std::exp(-x * x / 2), 0.0); });
    CHECK(tail_mass(narrow) < 1e-60);
    CHECK(norm(narrow) == doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-13));
    const auto flat = sampled(g, [](double) { return cplx(1.0, 0.0); });
    CHECK(tail_mass(flat) == doctest::Approx(2.0 * 52 / 1024));  // ceil(0.05 n) points per end
    CHECK(l2_distance(narrow, narrow) == 0.0);
}
