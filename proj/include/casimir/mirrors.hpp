#pragma once

#include <cmath>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "casimir/constants.hpp"

/// Mirror reflection amplitudes evaluated at imaginary frequencies.
///
/// A mirror is described by one of five models. The dielectric models yield
/// Fresnel amplitudes at imaginary frequency xi with
///   kappa   = sqrt(k^2 + xi^2/c^2)
///   kappa_m = sqrt(k^2 + eps(i xi) xi^2/c^2)
///   r_TE = (kappa - kappa_m)/(kappa + kappa_m)
///   r_TM = (eps kappa - kappa_m)/(eps kappa + kappa_m)
/// All amplitudes are real for real xi and satisfy |r| <= 1 (passivity).
///
/// Sign convention: a perfect mirror returns r_TE = -1, r_TM = +1, so that
/// the product r1*r2 for a pair of identical perfect mirrors is +1 in each
/// polarization (the perfect-reflector limit of the force formula). Only
/// products r1*r2 ever enter the force, so the per-amplitude sign is not
/// observable.

namespace casimir {

enum class Polarization { TE, TM };

/// One (xi, k, p) evaluation point on the imaginary-frequency axis.
struct FieldModeIm {
    double xi;  ///< imaginary frequency [rad/s], >= 0
    double k;   ///< transverse wavevector magnitude [1/m], >= 0
    Polarization p;

    double kappa() const { return std::hypot(k, xi / si.c); }
};

struct PerfectMirror {};

/// Frequency-independent amplitude r0 in both polarizations, |r0| <= 1.
struct ScalarMirror {
    explicit ScalarMirror(double r0);
    double r0;
};

/// eps(i xi) = 1 + omega_p^2/xi^2.
struct PlasmaMirror {
    explicit PlasmaMirror(double omega_p);
    double omega_p;  ///< plasma frequency [rad/s], > 0
};

/// eps(i xi) = 1 + omega_p^2/(xi (xi + gamma)); gamma = 0 reduces to plasma.
struct DrudeMirror {
    DrudeMirror(double omega_p, double gamma);
    double omega_p;  ///< plasma frequency [rad/s], > 0
    double gamma;    ///< relaxation rate [rad/s], >= 0
};

/// Permittivity sampled on a strictly increasing xi grid, eps >= 1 on every
/// row, interpolated log-log. Evaluation outside the grid throws unless
/// clamp_ends is set, in which case end values are reused.
struct TabulatedMirror {
    TabulatedMirror(std::vector<double> xi_grid, std::vector<double> eps_grid,
                    bool clamp_ends = false);
    std::vector<double> xi;
    std::vector<double> eps;
    bool clamp_ends;
};

using MirrorModel = std::variant<PerfectMirror, ScalarMirror, PlasmaMirror, DrudeMirror,
                                 TabulatedMirror>;

/// eps(i xi) for the dielectric models (Plasma, Drude, Tabulated).
///
/// Returns +infinity for Plasma/Drude at xi = 0 (divergent sentinel); throws
/// std::invalid_argument for Perfect/Scalar, and std::domain_error for a
/// Tabulated model evaluated off-grid without clamp_ends.
double permittivity_im(const MirrorModel& model, double xi);

/// Reflection amplitude r(i xi, k, p) for any model.
///
/// At xi = 0 the dielectric models use the xi -> 0+ limit at fixed k instead
/// of dividing by zero: the plasma TE amplitude stays finite (kappa_m ->
/// sqrt(k^2 + omega_p^2/c^2)), the Drude TE amplitude vanishes, and TM -> 1
/// for both.
double reflection_amplitude(const MirrorModel& model, FieldModeIm mode);

/// Reads a permittivity table from CSV: header "xi_rad_per_s,epsilon", one
/// pair per line, '#' comments allowed. Malformed rows, non-monotone xi, or
/// eps < 1 raise IoError naming the offending line.
MirrorModel load_tabulated_permittivity(const std::filesystem::path& path,
                                        bool clamp_ends = false);

/// lambda_p = 2 pi c / omega_p.
double plasma_wavelength(double omega_p);
/// omega_p = 2 pi c / lambda_p.
double plasma_frequency_from_wavelength(double lambda_p);

/// Built-in plasma presets (lambda_p = 136 nm for gold, 137 nm for copper).
PlasmaMirror gold_plasma();
PlasmaMirror copper_plasma();

std::string model_name(const MirrorModel& model);

}  // namespace casimir
