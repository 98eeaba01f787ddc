#pragma once

#include "casimir/mirrors.hpp"
#include "casimir/quadrature.hpp"

/// Zero-temperature Casimir force and energy between two plane mirrors.
///
/// The force between real mirrors is an integral over imaginary frequencies
/// xi and transverse wavevectors k of the round-trip factor
///   kappa r1 r2 / (exp(2 kappa L) - r1 r2),   kappa = sqrt(k^2 + xi^2/c^2),
/// summed over TE/TM. The integrand is smooth and exponentially damped, so
/// the result is finite and cutoff-independent, unlike the bulk vacuum
/// energy density (see radiometry.hpp).
///
/// Sign convention: the attractive force is reported as a positive number
/// and the corresponding pressure is negative (ForceResult::signed_pressure).

namespace casimir {

/// Plane-plane cavity: area A, separation L, with A >> L^2 assumed.
struct CavityGeometry {
    CavityGeometry(double area_m2, double separation_m);
    double area;        ///< [m^2], > 0
    double separation;  ///< [m], > 0

    /// True when area >= 100 * separation^2; outside this regime the
    /// per-unit-area formulas are still evaluated but flagged.
    bool area_regime_ok() const { return area >= 100.0 * separation * separation; }
};

/// Force evaluation outcome. force = pressure * area; eta is the ratio to
/// the ideal (perfect-mirror) closed form at the same geometry.
struct ForceResult {
    double force;     ///< [N], attractive reported positive
    double pressure;  ///< [Pa], force / area
    double eta;       ///< reduction factor, force / ideal_casimir_force
    double err_est;   ///< relative error estimate

    /// Thermodynamic-convention pressure (negative for attraction).
    double signed_pressure() const { return -pressure; }
};

/// Ideal perfect-mirror force, hbar c pi^2 A / (240 L^4) [N].
double ideal_casimir_force(const CavityGeometry& g);

/// Ideal perfect-mirror binding energy, hbar c pi^2 A / (720 L^3) [J].
/// Satisfies E = F*L/3 exactly.
double ideal_casimir_energy(const CavityGeometry& g);

/// Full scattering-formula force at zero temperature.
///
/// Nested adaptive quadrature in the scaled variables v = 2 xi L / c (outer)
/// and t = 2 kappa L (inner). Throws ConvergenceError (with best estimate)
/// if the tolerance cannot be met, PassivityError if r1*r2 > 1 is seen.
ForceResult casimir_force_scattering(const MirrorModel& m1, const MirrorModel& m2,
                                     const CavityGeometry& g, const QuadratureSpec& q = {});

/// Same force with the xi integral truncated at xi_max [rad/s]. Used to
/// demonstrate cutoff independence: for perfect mirrors the result is
/// insensitive to xi_max once xi_max >> c/L.
ForceResult casimir_force_scattering_xi_truncated(const MirrorModel& m1, const MirrorModel& m2,
                                                  const CavityGeometry& g,
                                                  const QuadratureSpec& q, double xi_max);

/// Binding energy at zero temperature [J], E(L) = integral_L^inf F(L') dL',
/// evaluated with the substitution u = L/L'. Reproduces the ideal closed
/// form for perfect mirrors.
double casimir_energy_scattering(const MirrorModel& m1, const MirrorModel& m2,
                                 const CavityGeometry& g, const QuadratureSpec& q = {});

/// eta = F_real / F_ideal at the same geometry; in (0, 1] for passive
/// identical mirrors.
double reduction_factor(const MirrorModel& m1, const MirrorModel& m2, const CavityGeometry& g,
                        const QuadratureSpec& q = {});

}  // namespace casimir
