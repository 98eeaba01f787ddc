#pragma once

#include "casimir/mirrors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/scattering.hpp"

/// Finite-temperature Casimir force between plane mirrors. The imaginary
/// frequency axis collapses to the Matsubara sum
///
///   F(T) = (k_B T A / pi) (2L)^-3 sum_n' sum_p
///              int_{t_n}^inf dt t^2 r1 r2 / (e^t - r1 r2),
///
/// t_n = 2 xi_n L / c, xi_n = 2 pi n k_B T / hbar, and the n = 0 term
/// carries weight 1/2. As T -> 0 the sum goes over to the zero-temperature
/// integral; at high T the n = 0 term alone survives (classical limit).

namespace casimir {

struct ThermalSpec {
    double temperature = 0.0;  ///< [K], >= 0
    int n_max = 0;  ///< highest Matsubara index (>= 1 if set); 0 picks the default cutoff,
                    ///< the smallest n with xi_n L / c > 30
    double tail_tol = 1e-9;  ///< relative bound required of the truncated tail
};

/// n-th Matsubara frequency xi_n = 2 pi n k_B T / hbar [rad/s].
double matsubara_frequency(double temperature, int n);

/// Contribution of Matsubara index n to the force [N], prefactor and the
/// n = 0 half weight included, so that summing over n reproduces
/// casimir_force_thermal. Terms are positive for identical passive mirrors
/// and decay like e^{-t_n} for large n.
double matsubara_force_term(const MirrorModel& m1, const MirrorModel& m2,
                            const CavityGeometry& g, double temperature, int n,
                            const QuadratureSpec& q = {});

/// Total force at temperature spec.temperature. spec.temperature == 0
/// falls back to casimir_force_scattering. The sum runs to at most n_max
/// (or the automatic cutoff) but stops as soon as the geometric tail bound
/// drops below tail_tol relative to the partial sum; a truncation that
/// leaves a larger tail raises ConvergenceError carrying the partial sum.
ForceResult casimir_force_thermal(const MirrorModel& m1, const MirrorModel& m2,
                                  const CavityGeometry& g, const ThermalSpec& spec,
                                  const QuadratureSpec& q = {});

/// (F(T) - F(0)) / F(0); positive when temperature strengthens the
/// attraction. Grows like (T L)^3 toward the classical regime and vanishes
/// rapidly for k_B T << hbar c / (2 L).
double thermal_correction_ratio(const MirrorModel& m1, const MirrorModel& m2,
                                const CavityGeometry& g, const ThermalSpec& spec,
                                const QuadratureSpec& q = {});

/// Binding energy at temperature spec.temperature [J],
/// E_T(L) = integral_L^inf F_T(L') dL'. spec.temperature == 0 falls back to
/// casimir_energy_scattering.
double casimir_energy_thermal(const MirrorModel& m1, const MirrorModel& m2,
                              const CavityGeometry& g, const ThermalSpec& spec,
                              const QuadratureSpec& q = {});

/// High-temperature (n = 0 only) perfect-mirror force,
/// zeta(3) k_B T A / (4 pi L^3) [N].
double classical_limit_force(const CavityGeometry& g, double temperature);

}  // namespace casimir
