// Internal: scaled-variable kernel shared by the zero-temperature and
// Matsubara force integrals. Not installed.
#pragma once

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/mirrors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::detail {

inline double pair_reflection(const MirrorModel& m1, const MirrorModel& m2, double xi, double k,
                              Polarization p) {
    const double rho = reflection_amplitude(m1, {xi, k, p}) *
                       reflection_amplitude(m2, {xi, k, p});
    if (rho > 1.0 + 1e-12)
        throw PassivityError("reflection product r1*r2 = " + std::to_string(rho) +
                             " exceeds 1 at xi=" + std::to_string(xi) + " rad/s");
    return rho;
}

// t^2 rho / (e^t - rho) on t in [v, inf), with t = 2 kappa L and v = 2 xi L / c.
// The denominator is computed as expm1(t) + (1 - rho): stable where both the
// numerator and e^t - rho vanish (t -> 0 with rho -> 1).
struct ScaledKernel {
    const MirrorModel& m1;
    const MirrorModel& m2;
    double separation;
    double v;
    Polarization p;

    double operator()(double t) const {
        const double xi = si.c * v / (2.0 * separation);
        const double k = std::sqrt(std::max(t * t - v * v, 0.0)) / (2.0 * separation);
        const double rho = pair_reflection(m1, m2, xi, k, p);
        if (rho == 0.0) return 0.0;
        return t * t * rho / (std::expm1(t) + (1.0 - rho));
    }
};

inline quad::Result kernel_integral(const MirrorModel& m1, const MirrorModel& m2,
                                    double separation, double v, Polarization p, double rel_tol,
                                    double abs_tol, int max_panels) {
    const ScaledKernel f{m1, m2, separation, v, p};
    // 3.0: decay scale of t^2 e^{-t} past the lower limit
    return quad::integrate_upper_infinite(f, v, 3.0, rel_tol, abs_tol, max_panels);
}

}  // namespace casimir::detail
