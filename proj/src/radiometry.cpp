#include "casimir/radiometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace casimir {

namespace {

void check_mode(ModePoint m) {
    if (!(m.omega >= 0.0) || !(m.temperature >= 0.0))
        throw std::invalid_argument("ModePoint: omega and temperature must be >= 0");
    if (m.omega == 0.0 && m.temperature == 0.0)
        throw std::invalid_argument("ModePoint: omega and temperature must not both be zero");
}

}  // namespace

double mean_photon_number(ModePoint m) {
    check_mode(m);
    if (m.omega == 0.0)
        throw std::domain_error("mean_photon_number: divergent occupancy at omega = 0, T > 0");
    if (m.temperature == 0.0) return 0.0;
    // 1/expm1 is accurate for small x and underflows cleanly to 0 for large x.
    const double x = si.hbar * m.omega / (si.k_B * m.temperature);
    return 1.0 / std::expm1(x);
}

double try_mean_photon_number(ModePoint m) noexcept {
    if (m.omega == 0.0) return std::numeric_limits<double>::infinity();
    if (m.temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(si.hbar * m.omega / (si.k_B * m.temperature));
}

double mean_mode_energy(ModePoint m, bool include_zero_point) {
    check_mode(m);
    if (m.omega == 0.0)
        throw std::domain_error("mean_mode_energy: divergent occupancy at omega = 0, T > 0");
    double e = 0.0;
    if (m.temperature > 0.0) {
        const double x = si.hbar * m.omega / (si.k_B * m.temperature);
        e = si.hbar * m.omega / std::expm1(x);
    }
    if (include_zero_point) e += 0.5 * si.hbar * m.omega;
    return e;
}

double blackbody_energy_density(double temperature) {
    if (!(temperature >= 0.0))
        throw std::invalid_argument("blackbody_energy_density: temperature must be >= 0");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double kt = si.k_B * temperature;
    const double hc = si.hbar * si.c;
    return pi2 * kt * kt * kt * kt / (15.0 * hc * hc * hc);
}

double vacuum_energy_density(CutoffSpec cut) {
    if (!(cut.omega_max >= 0.0))
        throw std::invalid_argument("vacuum_energy_density: omega_max must be >= 0");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double hw = si.hbar * cut.omega_max;
    const double hc = si.hbar * si.c;
    return hw * hw * hw * hw / (8.0 * pi2 * hc * hc * hc);
}

}  // namespace casimir
