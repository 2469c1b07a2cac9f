#include "linpot/wave.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <cstdlib>

#include "linpot/errors.hpp"

namespace linpot {

std::vector<double> Grid::points() const {
    std::vector<double> xs(n);
    for (std::size_t j = 0; j < n; ++j) {
        xs[j] = x(j);
    }
    return xs;
}

void Grid::validate() const {
    if (n < 16 || (n & (n - 1)) != 0) {
        throw ShapeError("grid size must be a power of two >= 16, got " + std::to_string(n));
    }
    if (!(xmax > xmin) || !std::isfinite(xmin) || !std::isfinite(xmax)) {
        throw ShapeError("grid requires finite xmin < xmax");
    }
}

Window central_window(const Grid& grid, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw ShapeError("window fraction must lie in (0, 1]");
    }
    const double half = 0.5 * fraction * grid.span();
    const double lo = grid.center() - half;
    const double hi = grid.center() + half;
    Window w;
    w.first = static_cast<std::size_t>(std::ceil((lo - grid.xmin) / grid.dx() - 1e-9));
    w.last = std::min(grid.n, static_cast<std::size_t>(std::floor((hi - grid.xmin) / grid.dx() + 1e-9)) + 1);
    return w;
}

WaveSample::WaveSample(Grid grid, std::vector<cplx> values, double t, double hbar)
    : grid_(grid), values_(std::move(values)), t_(t), hbar_(hbar) {
    grid_.validate();
    if (values_.size() != grid_.n) {
        throw ShapeError("wave sample size does not match its grid");
    }
    if (!(hbar_ > 0.0)) {
        throw ShapeError("hbar must be positive");
    }
    for (const cplx& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw EvaluationError("wave sample contains non-finite amplitudes");
        }
    }
}

double tail_mass(const WaveSample& psi, double edge_fraction) {
    const std::size_t n = psi.size();
    const auto edge = static_cast<std::size_t>(std::ceil(edge_fraction * static_cast<double>(n)));
    double total = 0.0;
    double tails = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double p = std::norm(psi[j]);
        total += p;
        if (j < edge || j >= n - edge) {
            tails += p;
        }
    }
    return total > 0.0 ? tails / total : 0.0;
}

void write_wave_csv(std::ostream& out, const WaveSample& psi) {
    out << "x,re,im,abs2\n";
    out << std::setprecision(17);
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const cplx v = psi[j];
        out << psi.grid().x(j) << ',' << v.real() << ',' << v.imag() << ',' << std::norm(v) << '\n';
    }
}

void write_wave_csv(const std::string& path, const WaveSample& psi) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    write_wave_csv(out, psi);
}

std::vector<WaveCsvRow> read_wave_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "x,re,im,abs2") {
        throw ShapeError("wave CSV: missing header 'x,re,im,abs2'");
    }
    std::vector<WaveCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        // strtod rather than operator>>: the latter rejects subnormal values.
        double fields[4] = {};
        const char* p = line.c_str();
        for (int i = 0; i < 4; ++i) {
            char* end = nullptr;
            fields[i] = std::strtod(p, &end);
            const char expected = (i < 3) ? ',' : '\0';
            if (end == p || *end != expected) {
                throw ShapeError("wave CSV: malformed row '" + line + "'");
            }
            p = end + 1;
        }
        rows.push_back({fields[0], fields[1], fields[2], fields[3]});
    }
    return rows;
}

}  // namespace linpot
