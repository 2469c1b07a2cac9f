#pragma once

namespace linpot {

/// Regime switch for Ai: Maclaurin series inside |z| <= series_cutoff_abs,
/// asymptotic expansions outside.
struct SpecialFnConfig {
    double series_cutoff_abs = 7.0;
    double target_abs_err = 1e-11;
};

inline constexpr double kAiryRangeLimit = 120.0;
inline constexpr int kHermiteMaxOrder = 512;

/// Airy function Ai(z) for |z| <= 120, absolute error <= 1e-11.
double airy_ai(double z, const SpecialFnConfig& config = {});

/// Physicists' Hermite polynomial H_n(x), n <= 512. Throws RangeError if the
/// value does not fit in a double; use hermite_scaled for large n and |x|.
double hermite(int n, double x);

/// H_n(x) = mantissa * 2^exponent, computed with a rescaled recurrence.
struct ScaledValue {
    double mantissa = 0.0;
    int exponent = 0;
};
ScaledValue hermite_scaled(int n, double x);

/// Orthonormal Hermite function H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)).
double hermite_function(int n, double x);

/// H_n(x) / sqrt(2^n n!), by the normalized three-term recurrence.
double hermite_normalized(int n, double x);

namespace detail {

/// Both Ai regimes, exposed so tests can cross-check them at the switch radius.
double airy_ai_series(double z);
double airy_ai_asymptotic(double z);
/// Ai'(z) from the Maclaurin series, |z| <= 7.
double airy_ai_prime_series(double z);

inline constexpr long double kAiryAi0 = 0.355028053887817239260063186004L;
inline constexpr long double kAiryAiPrime0 = -0.258819403792806798405183560189L;

}  // namespace detail

}  // namespace linpot
