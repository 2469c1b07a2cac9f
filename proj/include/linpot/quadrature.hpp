#pragma once

#include <functional>
#include <span>
#include <vector>

namespace linpot {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultQuadTol = 1e-12;
inline constexpr int kDefaultQuadDepth = 40;

/// Adaptive Simpson quadrature of f over [t0, t1].
///
/// The absolute error estimate of the result is <= tol. Throws AccuracyError
/// (carrying the achieved estimate) when some subinterval still fails the
/// Richardson test at max_depth.
double integrate(const RealFunction& f, double t0, double t1,
                 double tol = kDefaultQuadTol, int max_depth = kDefaultQuadDepth);

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule with n nodes, computed by Newton iteration on P_n. Cached per n.
const GaussLegendreRule& gauss_legendre(int n);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
template <class F>
double gauss_legendre_integral(const F& f, double a, double b, const GaussLegendreRule& rule) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

}  // namespace linpot
