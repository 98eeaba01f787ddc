#pragma once

#include "casimir/mirrors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/thermal.hpp"

/// Plane-sphere force in the proximity force approximation:
/// F_ps(L) = 2 pi R e_pp(L), with e_pp the plane-plane binding energy per
/// unit area at the gap of closest approach. Valid for R >> L; the
/// SphereGeometry carries a validity flag rather than an error bar.

namespace casimir {

struct SphereGeometry {
    SphereGeometry(double radius_m, double gap_m);
    double radius;  ///< [m], > 0
    double gap;     ///< closest approach [m], > 0

    /// Proximity approximation regime, R >= 100 L.
    bool pfa_ok() const { return radius >= 100.0 * gap; }
};

/// Perfect-mirror closed form, pi^3 hbar c R / (360 L^3) [N].
double ideal_plane_sphere_force(const SphereGeometry& sg);

/// Zero-temperature plane-sphere force [N]. The reduction factor relative
/// to ideal_plane_sphere_force equals the plane-plane energy reduction
/// factor at the same gap by construction.
double plane_sphere_force_pfa(const MirrorModel& m1, const MirrorModel& m2,
                              const SphereGeometry& sg, const QuadratureSpec& q = {});

/// Finite-temperature variant; th.temperature == 0 matches the zero-T form.
double plane_sphere_force_pfa(const MirrorModel& m1, const MirrorModel& m2,
                              const SphereGeometry& sg, const ThermalSpec& th,
                              const QuadratureSpec& q = {});

}  // namespace casimir
