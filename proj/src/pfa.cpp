#include "casimir/pfa.hpp"

#include <numbers>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

namespace {
constexpr double pi = std::numbers::pi;
}

SphereGeometry::SphereGeometry(double radius_m, double gap_m) : radius(radius_m), gap(gap_m) {
    if (!(radius > 0.0)) throw std::invalid_argument("SphereGeometry: radius must be > 0");
    if (!(gap > 0.0)) throw std::invalid_argument("SphereGeometry: gap must be > 0");
}

double ideal_plane_sphere_force(const SphereGeometry& sg) {
    const double L = sg.gap;
    return pi * pi * pi * si.hbar * si.c * sg.radius / (360.0 * L * L * L);
}

double plane_sphere_force_pfa(const MirrorModel& m1, const MirrorModel& m2,
                              const SphereGeometry& sg, const QuadratureSpec& q) {
    const CavityGeometry unit_area(1.0, sg.gap);
    const double e_pp = casimir_energy_scattering(m1, m2, unit_area, q);
    return 2.0 * pi * sg.radius * e_pp;
}

double plane_sphere_force_pfa(const MirrorModel& m1, const MirrorModel& m2,
                              const SphereGeometry& sg, const ThermalSpec& th,
                              const QuadratureSpec& q) {
    const CavityGeometry unit_area(1.0, sg.gap);
    const double e_pp = casimir_energy_thermal(m1, m2, unit_area, th, q);
    return 2.0 * pi * sg.radius * e_pp;
}

}  // namespace casimir
