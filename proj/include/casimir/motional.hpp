#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "casimir/scattering.hpp"

/// Motional (dynamical) Casimir quantities for a single flat mirror moving
/// along its normal: the dissipative susceptibility chi relating the
/// radiation-reaction force to the displacement, F[Omega] = chi[Omega]
/// q[Omega], in the high-temperature and vacuum limits, plus the mass
/// correction of a rigid cavity under uniform acceleration.

namespace casimir {

struct MotionalSpec {
    MotionalSpec(double area_m2, double omega_rad_per_s, double temperature_K);
    double area;         ///< [m^2], > 0
    double omega;        ///< mechanical angular frequency [rad/s], >= 0
    double temperature;  ///< [K], >= 0

    /// Large-area condition A >> c^2/Omega^2, with a 10x margin.
    bool geometry_regime_ok() const;
    /// geometry_regime_ok and k_B T >> hbar Omega (10x margin).
    bool thermal_regime_ok() const;
    /// geometry_regime_ok and hbar Omega >> k_B T (10x margin).
    bool vacuum_regime_ok() const;
};

/// chi evaluated at a signed frequency; odd and purely imaginary. These are
/// the spectral kernels; the MotionalSpec wrappers below apply them at
/// spec.omega. Frequency convention: displacement components vary as
/// e^{-i Omega t}.
std::complex<double> thermal_susceptibility_at(double area, double temperature, double omega);
std::complex<double> vacuum_susceptibility_at(double area, double omega);

/// High-temperature susceptibility i (pi^2 hbar A / 15)(k_B T / hbar c)^4
/// Omega [N/m]. Time domain: F(t) = -(pi^2 hbar A/15)(k_B T/hbar c)^4 q'(t).
std::complex<double> thermal_motional_susceptibility(const MotionalSpec& s);

/// Vacuum susceptibility i hbar A Omega^5 / (60 pi^2 c^4) [N/m].
/// Time domain: F(t) = -(hbar A / 60 pi^2 c^4) q'''''(t); a fifth
/// derivative, so any motion with polynomial q(t) of degree <= 4 radiates
/// nothing.
std::complex<double> vacuum_motional_susceptibility(const MotionalSpec& s);

struct MonochromaticTrajectory {
    double q0;     ///< displacement amplitude [m], q(t) = q0 cos(omega t)
    double omega;  ///< [rad/s], >= 0
};

/// Uniformly sampled positions q_j = q(j dt). Spectral evaluation treats
/// the record as one period of a periodic signal; non-periodic inputs that
/// are not polynomial trends must be windowed by the caller, otherwise the
/// transform leaks.
struct SampledTrajectory {
    double dt;  ///< [s], > 0
    std::vector<double> positions;
};

using Trajectory = std::variant<MonochromaticTrajectory, SampledTrajectory>;

enum class MotionalRegime { vacuum, thermal };

/// Closed-form force at time t for a cosine trajectory,
/// Re[chi(omega) q0 e^{-i omega t}].
double radiation_reaction_force_at(const MonochromaticTrajectory& tr, const MotionalSpec& s,
                                   MotionalRegime regime, double t);

/// Force series on the sample grid. Polynomial records (degree <= 4 within
/// a 1e-12 relative floor) are differentiated in closed form, so uniform
/// velocity or acceleration gives an exactly zero vacuum force. Anything
/// else goes through a discrete transform with the susceptibility applied
/// at each signed bin frequency. Throws std::domain_error when s.omega
/// exceeds the Nyquist rate pi/dt.
std::vector<double> radiation_reaction_force(const SampledTrajectory& tr, const MotionalSpec& s,
                                             MotionalRegime regime);

/// Variant dispatcher. Monochromatic trajectories are rendered over one
/// period at 64 samples (a single zero sample when omega == 0).
std::vector<double> radiation_reaction_force(const Trajectory& tr, const MotionalSpec& s,
                                             MotionalRegime regime);

/// Mass correction of a rigid cavity, mu = (E_Cas - F_Cas L)/c^2 with the
/// ideal closed forms taken as positive magnitudes. F_Cas L = 3 E_Cas makes
/// mu = -2 E_Cas / c^2 < 0; the sign is reported as computed.
struct InertiaResult {
    double mu;        ///< [kg]
    double e_cas;     ///< ideal binding energy [J]
    double f_cas_L;   ///< ideal force times separation [J]
};

InertiaResult casimir_inertia_correction(const CavityGeometry& g);

}  // namespace casimir
