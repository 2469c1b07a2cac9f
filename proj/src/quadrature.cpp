#include "linpot/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "linpot/errors.hpp"

namespace linpot {

namespace {

struct SimpsonState {
    double worst_error = 0.0;
    bool failed = false;
};

double simpson_recurse(const RealFunction& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth, SimpsonState& state) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || m <= a || m >= b) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        state.failed = true;
        state.worst_error += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, state) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, state);
}

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

double integrate(const RealFunction& f, double t0, double t1, double tol, int max_depth) {
    if (!(tol > 0.0)) {
        throw DomainError("integrate: tolerance must be positive");
    }
    if (t1 < t0) {
        throw DomainError("integrate: requires t0 <= t1");
    }
    if (t1 == t0) {
        return 0.0;
    }
    const double fa = f(t0);
    const double fb = f(t1);
    const double fm = f(0.5 * (t0 + t1));
    const double whole = (t1 - t0) / 6.0 * (fa + 4.0 * fm + fb);
    SimpsonState state;
    const double result = simpson_recurse(f, t0, t1, fa, fm, fb, whole, tol, max_depth, state);
    if (state.failed && state.worst_error > tol) {
        throw AccuracyError("integrate: no convergence at max refinement depth", result,
                            state.worst_error);
    }
    return result;
}

const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_rule(n)).first;
    }
    return it->second;
}

}  // namespace linpot
