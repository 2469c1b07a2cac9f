#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace linpot {

using cplx = std::complex<double>;

/// Uniform periodic grid x_j = xmin + j*dx, j = 0..n-1, dx = (xmax - xmin)/n.
/// xmax itself is the periodic image of xmin and is not a sample point.
struct Grid {
    double xmin = -40.0;
    double xmax = 40.0;
    std::size_t n = 4096;

    double span() const { return xmax - xmin; }
    double dx() const { return span() / static_cast<double>(n); }
    double x(std::size_t j) const { return xmin + static_cast<double>(j) * dx(); }
    double center() const { return 0.5 * (xmin + xmax); }
    std::vector<double> points() const;

    /// Throws ShapeError unless n >= 16 is a power of two and xmax > xmin.
    void validate() const;

    bool operator==(const Grid&) const = default;
};

/// Index range [first, last) of the central `fraction` of the grid.
struct Window {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t size() const { return last - first; }
};
Window central_window(const Grid& grid, double fraction);

/// Complex wave function sampled on a grid at time t.
class WaveSample {
public:
    WaveSample(Grid grid, std::vector<cplx> values, double t, double hbar);

    const Grid& grid() const { return grid_; }
    std::span<const cplx> values() const { return values_; }
    const cplx& operator[](std::size_t j) const { return values_[j]; }
    std::size_t size() const { return values_.size(); }
    double t() const { return t_; }
    double hbar() const { return hbar_; }

    WaveSample with_values(std::vector<cplx> values) const {
        return WaveSample(grid_, std::move(values), t_, hbar_);
    }
    WaveSample with_time(double t) const { return WaveSample(grid_, values_, t, hbar_); }

private:
    Grid grid_;
    std::vector<cplx> values_;
    double t_;
    double hbar_;
};

/// Fraction of the total probability within `edge_fraction` of the grid
/// length of either end (each end counts ceil(edge_fraction * n) points).
double tail_mass(const WaveSample& psi, double edge_fraction = 0.05);

/// CSV dump with header `x,re,im,abs2`, 17 significant digits.
void write_wave_csv(std::ostream& out, const WaveSample& psi);
void write_wave_csv(const std::string& path, const WaveSample& psi);

struct WaveCsvRow {
    double x = 0.0;
    double re = 0.0;
    double im = 0.0;
    double abs2 = 0.0;
};
std::vector<WaveCsvRow> read_wave_csv(std::istream& in);

}  // namespace linpot
