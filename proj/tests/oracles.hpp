// Reference values computed independently of the library code paths:
// series expansions for the constant-amplitude closed forms and a plain
// Simpson rule for the Planck spectral integral. Golden constants were
// produced with an arbitrary-precision evaluation of the same closed forms.
#pragma once

#include <cmath>
#include <cstdlib>

namespace oracle {

inline constexpr double zeta3 = 1.2020569031595943;
inline constexpr double zeta4 = 1.0823232337111382;  // pi^4/90

// integral_a^inf t^2 x/(e^t - x) dt = sum_m x^m e^{-m a} (a^2/m + 2a/m^2 + 2/m^3);
// geometric expansion of the denominator, term-by-term integration.
// Accurate for a > 0 or |x| < 1.
inline double tail_integral(double a, double x) {
    double sum = 0.0;
    double pw = 1.0;
    for (int m = 1; m <= 4000; ++m) {
        pw *= x;
        if (pw == 0.0) break;
        const double md = m;
        const double term =
            pw * std::exp(-md * a) * (a * a / md + 2.0 * a / (md * md) + 2.0 / (md * md * md));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

inline double polylog(int s, double x) {
    double sum = 0.0;
    double pw = 1.0;
    for (int m = 1; m <= 4000; ++m) {
        pw *= x;
        if (pw == 0.0) break;
        const double term = pw / std::pow(static_cast<double>(m), s);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// integral_0^inf u^3/(e^u - 1) du by composite Simpson on [eps, 60]
// (value pi^4/15; the numerical form is the cross-check).
inline double planck_spectral_integral() {
    const double a = 1e-8, b = 60.0;
    const int n = 60000;  // even
    const double h = (b - a) / n;
    auto f = [](double u) { return u * u * u / std::expm1(u); };
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::abs(b);
}

}  // namespace oracle
