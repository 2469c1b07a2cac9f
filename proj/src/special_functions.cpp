#include "linpot/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "linpot/errors.hpp"

namespace linpot {

namespace detail {

// Ai(z) = Ai(0) f(z) + Ai'(0) g(z) with the two homogeneous Maclaurin series
// f = sum 3^k (1/3)_k z^{3k}/(3k)!,  g = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!.
// Summed in long double: near z = +7 both series reach ~1e5 while Ai ~ 1e-7.
double airy_ai_series(double z) {
    const long double x = z;
    const long double x3 = x * x * x;
    long double f = 1.0L;
    long double g = x;
    long double tf = 1.0L;
    long double tg = x;
    for (int k = 1; k < 400; ++k) {
        tf *= x3 / static_cast<long double>((3 * k - 1) * (3 * k));
        tg *= x3 / static_cast<long double>((3 * k) * (3 * k + 1));
        f += tf;
        g += tg;
        if (std::fabs(tf) + std::fabs(tg) < 1e-22L * (std::fabs(f) + std::fabs(g))) {
            break;
        }
    }
    return static_cast<double>(kAiryAi0 * f + kAiryAiPrime0 * g);
}

double airy_ai_prime_series(double z) {
    const long double x = z;
    const long double x3 = x * x * x;
    // f' = sum z^{3k-1}..., g' = sum z^{3k}...
    long double fp = 0.0L;
    long double gp = 1.0L;
    long double tf = 1.0L;  // term of f, z^{3k}/(...)
    long double tg = 1.0L;  // term of g', z^{3k}/(...)
    for (int k = 1; k < 400; ++k) {
        tf *= x3 / static_cast<long double>((3 * k - 1) * (3 * k));
        tg *= x3 / static_cast<long double>((3 * k) * (3 * k - 2));
        const long double dfp = tf * static_cast<long double>(3 * k) / x;
        fp += (x == 0.0L) ? 0.0L : dfp;
        gp += tg;
        if (std::fabs(tf) + std::fabs(tg) < 1e-22L * (1.0L + std::fabs(fp) + std::fabs(gp))) {
            break;
        }
    }
    return static_cast<double>(kAiryAi0 * fp + kAiryAiPrime0 * gp);
}

double airy_ai_asymptotic(double z) {
    const double x = std::abs(z);
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
    // u_k = Gamma(3k+1/2) / (54^k k! Gamma(k+1/2))
    auto next_u = [](double u_prev, int k) {
        return u_prev * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
               (216.0 * k * (2.0 * k - 1.0));
    };
    if (z > 0.0) {
        double sum = 1.0;
        double u = 1.0;
        double last = 1.0;
        for (int k = 1; k < 200; ++k) {
            u = next_u(u, k);
            const double term = u / std::pow(zeta, k);
            if (term > last) {
                break;
            }
            sum += (k % 2 == 0 ? term : -term);
            last = term;
            if (term < 1e-18 * std::abs(sum)) {
                break;
            }
        }
        return 0.5 * inv_sqrt_pi * std::exp(-zeta) / std::pow(x, 0.25) * sum;
    }
    double p = 1.0;
    double q = 0.0;
    double u = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        u = next_u(u, k);
        const double term = u / std::pow(zeta, k);
        if (term > last) {
            break;
        }
        last = term;
        // Terms alternate between Q (odd k) and P (even k), each with sign (-1)^{floor(k/2)}.
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1) {
            q += sign * term;
        } else {
            p += sign * term;
        }
        if (term < 1e-18) {
            break;
        }
    }
    const double phase = zeta + 0.25 * std::numbers::pi;
    return inv_sqrt_pi / std::pow(x, 0.25) * (std::sin(phase) * p - std::cos(phase) * q);
}

}  // namespace detail

double airy_ai(double z, const SpecialFnConfig& config) {
    if (!(std::abs(z) <= kAiryRangeLimit)) {
        throw RangeError("airy_ai: |z| must be <= 120, got " + std::to_string(z));
    }
    if (!(config.series_cutoff_abs > 0.0) || !(config.target_abs_err >= 1e-13)) {
        throw RangeError("airy_ai: invalid SpecialFnConfig");
    }
    if (std::abs(z) <= config.series_cutoff_abs) {
        return detail::airy_ai_series(z);
    }
    return detail::airy_ai_asymptotic(z);
}

ScaledValue hermite_scaled(int n, double x) {
    if (n < 0 || n > kHermiteMaxOrder) {
        throw RangeError("hermite: unsupported order " + std::to_string(n));
    }
    if (n == 0) {
        return {1.0, 0};
    }
    constexpr int kRescale = 600;
    double prev = 1.0;
    double cur = 2.0 * x;
    int exponent = 0;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > 0x1p600) {
            cur = std::ldexp(cur, -kRescale);
            prev = std::ldexp(prev, -kRescale);
            exponent += kRescale;
        }
    }
    int e = 0;
    const double m = std::frexp(cur, &e);
    return {m, exponent + e};
}

double hermite(int n, double x) {
    const ScaledValue s = hermite_scaled(n, x);
    if (s.mantissa == 0.0) {
        return 0.0;
    }
    if (s.exponent > std::numeric_limits<double>::max_exponent) {
        throw RangeError("hermite: H_" + std::to_string(n) + "(" + std::to_string(x) +
                         ") overflows double; use hermite_scaled");
    }
    return std::ldexp(s.mantissa, s.exponent);
}

double hermite_function(int n, double x) {
    if (n < 0 || n > kHermiteMaxOrder) {
        throw RangeError("hermite_function: unsupported order " + std::to_string(n));
    }
    // The Gaussian factor is carried as a log so exp(-x^2/2) cannot underflow
    // before the polynomial growth catches up (large n near the turning point).
    double log_scale = -0.5 * x * x;
    double prev = 0.0;
    double cur = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
    for (int k = 1; k <= n; ++k) {
        const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150) {
            cur *= 1e-150;
            prev *= 1e-150;
            log_scale += 150.0 * std::numbers::ln10;
        }
    }
    return cur * std::exp(log_scale);
}

double hermite_normalized(int n, double x) {
    if (n < 0 || n > kHermiteMaxOrder) {
        throw RangeError("hermite_normalized: unsupported order " + std::to_string(n));
    }
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 1; k <= n; ++k) {
        const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace linpot
