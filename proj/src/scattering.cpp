#include "casimir/scattering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "kernels.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;

struct ForceQuadrature {
    const MirrorModel& m1;
    const MirrorModel& m2;
    const CavityGeometry& g;
    double inner_rel;
    double inner_abs;
    int max_panels;
    mutable bool inner_converged = true;

    double inner(double v, Polarization p) const {
        const auto r = detail::kernel_integral(m1, m2, g.separation, v, p, inner_rel, inner_abs,
                                               max_panels);
        if (!r.converged) inner_converged = false;
        return r.value;
    }
};

// F = hbar A c / (32 pi^2 L^4) * sum_p int_0^inf dv int_v^inf dt
//         t^2 r1 r2 / (e^t - r1 r2),
// with v = 2 xi L / c and t = 2 kappa L.
double force_prefactor(const CavityGeometry& g) {
    const double L = g.separation;
    return si.hbar * g.area * si.c / (32.0 * pi * pi * L * L * L * L);
}

ForceResult assemble(const CavityGeometry& g, double sum_v, double outer_abs_err,
                     double inner_rel, bool converged, int max_panels) {
    ForceResult res{};
    res.force = force_prefactor(g) * sum_v;
    res.pressure = res.force / g.area;
    res.eta = res.force / ideal_casimir_force(g);
    res.err_est = res.force == 0.0
                      ? 0.0
                      : outer_abs_err / std::abs(sum_v) + 3.0 * inner_rel;
    if (!converged)
        throw ConvergenceError("casimir_force_scattering: quadrature did not converge within " +
                                   std::to_string(max_panels) + " subdivisions",
                               res.force, res.err_est);
    return res;
}

ForceResult scattering_force(const MirrorModel& m1, const MirrorModel& m2,
                             const CavityGeometry& g, const QuadratureSpec& q, double v_max) {
    if (!(q.rel_tol > 0.0 && q.rel_tol < 1.0))
        throw std::invalid_argument("QuadratureSpec: rel_tol must be in (0, 1)");
    const double outer_rel = 0.5 * q.rel_tol;
    const double inner_rel = q.rel_tol / 20.0;

    ForceQuadrature fq{m1, m2, g, inner_rel, 0.0, q.max_subdivisions};
    // magnitude reference at v = 0 sets the absolute floor for dead regions
    double ref = 0.0;
    for (auto p : {Polarization::TE, Polarization::TM})
        ref += std::abs(fq.inner(0.0, p));
    fq.inner_abs = ref * inner_rel * 1e-2;

    const double v_scale = q.xi_scale > 0.0 ? 2.0 * q.xi_scale * g.separation / si.c : 3.0;
    double sum = 0.0, abs_err = 0.0;
    bool converged = true;
    for (auto p : {Polarization::TE, Polarization::TM}) {
        auto f = [&](double v) { return fq.inner(v, p); };
        const quad::Result r =
            v_max > 0.0
                ? quad::integrate(f, 0.0, v_max, outer_rel, ref * outer_rel * 1e-2,
                                  q.max_subdivisions)
                : quad::integrate_upper_infinite(f, 0.0, v_scale, outer_rel,
                                                 ref * outer_rel * 1e-2, q.max_subdivisions);
        sum += r.value;
        abs_err += r.abs_err;
        converged = converged && r.converged;
    }
    return assemble(g, sum, abs_err, inner_rel, converged && fq.inner_converged,
                    q.max_subdivisions);
}

}  // namespace

CavityGeometry::CavityGeometry(double area_m2, double separation_m)
    : area(area_m2), separation(separation_m) {
    if (!(area > 0.0)) throw std::invalid_argument("CavityGeometry: area must be > 0");
    if (!(separation > 0.0))
        throw std::invalid_argument("CavityGeometry: separation must be > 0");
}

double ideal_casimir_force(const CavityGeometry& g) {
    const double L = g.separation;
    return si.hbar * si.c * pi * pi * g.area / (240.0 * L * L * L * L);
}

double ideal_casimir_energy(const CavityGeometry& g) {
    const double L = g.separation;
    return si.hbar * si.c * pi * pi * g.area / (720.0 * L * L * L);
}

ForceResult casimir_force_scattering(const MirrorModel& m1, const MirrorModel& m2,
                                     const CavityGeometry& g, const QuadratureSpec& q) {
    return scattering_force(m1, m2, g, q, 0.0);
}

ForceResult casimir_force_scattering_xi_truncated(const MirrorModel& m1, const MirrorModel& m2,
                                                  const CavityGeometry& g,
                                                  const QuadratureSpec& q, double xi_max) {
    if (!(xi_max > 0.0))
        throw std::invalid_argument("casimir_force_scattering_xi_truncated: xi_max must be > 0");
    const double v_max = 2.0 * xi_max * g.separation / si.c;
    return scattering_force(m1, m2, g, q, v_max);
}

double casimir_energy_scattering(const MirrorModel& m1, const MirrorModel& m2,
                                 const CavityGeometry& g, const QuadratureSpec& q) {
    // E(L) = int_L^inf F(L') dL' = int_0^1 F(L/u) L/u^2 du
    const double L = g.separation;
    const double outer_rel = std::max(q.rel_tol, 1e-7);
    auto f = [&](double u) {
        const CavityGeometry gu(g.area, L / u);
        return casimir_force_scattering(m1, m2, gu, q).force * L / (u * u);
    };
    const double ref = casimir_force_scattering(m1, m2, g, q).force * L;
    const quad::Result r = quad::integrate(f, 0.0, 1.0, outer_rel, std::abs(ref) * outer_rel,
                                           q.max_subdivisions);
    if (!r.converged)
        throw ConvergenceError("casimir_energy_scattering: quadrature did not converge",
                               r.value, r.value == 0.0 ? 0.0 : r.abs_err / std::abs(r.value));
    return r.value;
}

double reduction_factor(const MirrorModel& m1, const MirrorModel& m2, const CavityGeometry& g,
                        const QuadratureSpec& q) {
    return casimir_force_scattering(m1, m2, g, q).eta;
}

}  // namespace casimir
