#include "linpot/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "linpot/errors.hpp"

namespace linpot::spectral {

namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
fftw_plan plan_for(std::size_t n, int sign) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, int>, fftw_plan> plans;
    std::lock_guard lock(mutex);
    const auto key = std::make_pair(n, sign);
    if (auto it = plans.find(key); it != plans.end()) {
        return it->second;
    }
    auto* buf = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    plans.emplace(key, plan);
    return plan;
}

std::vector<cplx> transform(std::span<const cplx> in, int sign) {
    std::vector<cplx> out(in.begin(), in.end());
    auto* data = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(plan_for(out.size(), sign), data, data);
    return out;
}

double smoothstep(double s) {
    // C-infinity transition from 0 (s <= 0) to 1 (s >= 1).
    if (s <= 0.0) {
        return 0.0;
    }
    if (s >= 1.0) {
        return 1.0;
    }
    const double a = std::exp(-1.0 / s);
    const double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

}  // namespace

std::vector<cplx> forward(std::span<const cplx> in) { return transform(in, FFTW_FORWARD); }

std::vector<cplx> inverse(std::span<const cplx> in) {
    auto out = transform(in, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (auto& v : out) {
        v *= scale;
    }
    return out;
}

std::vector<double> wavenumbers(const Grid& grid) {
    const std::size_t n = grid.n;
    const double dk = 2.0 * std::numbers::pi / grid.span();
    std::vector<double> k(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto m = static_cast<long long>(j);
        k[j] = dk * static_cast<double>(j < n / 2 ? m : m - static_cast<long long>(n));
    }
    return k;
}

std::vector<cplx> shift(std::span<const cplx> values, const Grid& grid, double shift) {
    if (values.size() != grid.n) {
        throw ShapeError("spectral::shift: size mismatch");
    }
    // Whole-cell shifts are a circular roll; exact even for non-periodic data
    // away from the wrapped cells.
    const double cells = shift / grid.dx();
    const double whole = std::round(cells);
    if (std::abs(cells - whole) < 1e-9) {
        const auto n = static_cast<long long>(grid.n);
        const long long m = ((static_cast<long long>(whole) % n) + n) % n;
        std::vector<cplx> out(grid.n);
        for (long long j = 0; j < n; ++j) {
            out[static_cast<std::size_t>((j + m) % n)] = values[static_cast<std::size_t>(j)];
        }
        return out;
    }
    auto spec = forward(values);
    const auto k = wavenumbers(grid);
    const std::size_t nyq = grid.n / 2;
    for (std::size_t j = 0; j < grid.n; ++j) {
        if (j == nyq) {
            spec[j] *= std::cos(k[j] * shift);
        } else {
            spec[j] *= std::polar(1.0, -k[j] * shift);
        }
    }
    return inverse(spec);
}

std::vector<cplx> second_derivative(std::span<const cplx> values, const Grid& grid) {
    if (values.size() != grid.n) {
        throw ShapeError("spectral::second_derivative: size mismatch");
    }
    auto spec = forward(values);
    const auto k = wavenumbers(grid);
    for (std::size_t j = 0; j < grid.n; ++j) {
        spec[j] *= -k[j] * k[j];
    }
    return inverse(spec);
}

std::vector<double> plateau_taper(const Grid& grid, double plateau_fraction,
                                  double support_fraction) {
    if (!(plateau_fraction > 0.0 && plateau_fraction < support_fraction && support_fraction <= 1.0)) {
        throw ShapeError("plateau_taper: need 0 < plateau < support <= 1");
    }
    const double inner = 0.5 * plateau_fraction * grid.span();
    const double outer = 0.5 * support_fraction * grid.span();
    std::vector<double> w(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double r = std::abs(grid.x(j) - grid.center());
        w[j] = 1.0 - smoothstep((r - inner) / (outer - inner));
    }
    return w;
}

std::vector<cplx> interpolate(std::span<const cplx> values, const Grid& grid,
                              std::span<const double> xs) {
    if (values.size() != grid.n) {
        throw ShapeError("spectral::interpolate: size mismatch");
    }
    const auto spec = forward(values);
    const std::size_t n = grid.n;
    const std::size_t half = n / 2;
    const double dk = 2.0 * std::numbers::pi / grid.span();
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<cplx> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double u = xs[i] - grid.xmin;
        const cplx step = std::polar(1.0, dk * u);
        // Positive and negative frequencies advance together from k = 0.
        cplx up(1.0, 0.0);
        cplx acc = spec[0];
        for (std::size_t m = 1; m < half; ++m) {
            up *= step;
            if ((m & 63) == 0) {
                up = std::polar(1.0, dk * static_cast<double>(m) * u);
            }
            acc += spec[m] * up + spec[n - m] * std::conj(up);
        }
        acc += spec[half] * std::cos(dk * static_cast<double>(half) * u);
        out[i] = acc * inv_n;
    }
    return out;
}

}  // namespace linpot::spectral
