#pragma once

#include "casimir/constants.hpp"

/// Black-body radiometry and bulk vacuum energy density.
///
/// Mode occupancies and energies follow the Planck/Bose form; the vacuum
/// energy density is the cutoff sum of hbar*omega/2 over all modes and is
/// therefore explicitly cutoff-dependent (it grows as the fourth power of
/// the cutoff). Contrast with the Casimir pressure computed in scattering.hpp,
/// which is finite and cutoff-independent.

namespace casimir {

/// A single field mode at a given temperature.
struct ModePoint {
    double omega;        ///< angular frequency [rad/s], >= 0
    double temperature;  ///< [K], >= 0
};

/// High-frequency cutoff for the bulk vacuum energy sum.
struct CutoffSpec {
    double omega_max;  ///< angular frequency cutoff [rad/s], >= 0
};

/// Mean photon number per mode, 1/(exp(hbar w / kB T) - 1).
///
/// Returns 0 at T = 0 (omega > 0). Throws std::domain_error for the
/// divergent classical occupancy at omega = 0, T > 0; bulk sweeps that
/// must not throw should use try_mean_photon_number().
double mean_photon_number(ModePoint m);

/// Like mean_photon_number() but reports the omega = 0, T > 0 divergence
/// as +infinity instead of throwing.
double try_mean_photon_number(ModePoint m) noexcept;

/// Mean energy per mode [J]: n_bar * hbar * omega, plus hbar*omega/2 when
/// include_zero_point is set.
double mean_mode_energy(ModePoint m, bool include_zero_point);

/// Black-body energy density [J/m^3]: pi^2 (kB T)^4 / (15 (hbar c)^3).
/// Finite and cutoff-independent (Stefan-Boltzmann form).
double blackbody_energy_density(double temperature);

/// Bulk vacuum (zero-point) energy density [J/m^3] up to the given cutoff:
/// (hbar omega_max)^4 / (8 pi^2 (hbar c)^3).
///
/// This quantity has no cutoff-independent value: it scales as omega_max^4
/// and diverges as the cutoff is removed.
double vacuum_energy_density(CutoffSpec cut);

}  // namespace casimir
