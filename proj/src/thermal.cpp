#include "casimir/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "casimir/errors.hpp"
#include "kernels.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double zeta3 = 1.2020569031595943;

// k_B T A / (pi (2L)^3)
double thermal_prefactor(const CavityGeometry& g, double temperature) {
    const double L = g.separation;
    return si.k_B * temperature * g.area / (8.0 * pi * L * L * L);
}

struct TermEval {
    double value = 0.0;    // sum over polarizations of the t-integral
    double abs_err = 0.0;
    bool converged = true;
};

TermEval eval_term(const MirrorModel& m1, const MirrorModel& m2, const CavityGeometry& g,
                   double t_n, double rel, double abs, int max_panels) {
    TermEval out;
    for (auto p : {Polarization::TE, Polarization::TM}) {
        const auto r = detail::kernel_integral(m1, m2, g.separation, t_n, p, rel, abs,
                                               max_panels);
        out.value += r.value;
        out.abs_err += r.abs_err;
        out.converged = out.converged && r.converged;
    }
    return out;
}

// Ratio bound between consecutive terms once past the t^2 e^{-t} peak:
// I(t + dt) / I(t) <= e^{-dt} ((t + dt) / t)^2 for t >= 2.
double term_decay_ratio(double t_n, double dt) {
    if (t_n < 2.0) return 1.0;  // bound not valid yet
    const double s = (t_n + dt) / t_n;
    return std::exp(-dt) * s * s;
}

}  // namespace

double matsubara_frequency(double temperature, int n) {
    if (temperature < 0.0)
        throw std::invalid_argument("matsubara_frequency: temperature must be >= 0");
    if (n < 0) throw std::invalid_argument("matsubara_frequency: n must be >= 0");
    return 2.0 * pi * n * si.k_B * temperature / si.hbar;
}

double matsubara_force_term(const MirrorModel& m1, const MirrorModel& m2,
                            const CavityGeometry& g, double temperature, int n,
                            const QuadratureSpec& q) {
    if (!(temperature > 0.0))
        throw std::invalid_argument("matsubara_force_term: temperature must be > 0");
    if (n < 0) throw std::invalid_argument("matsubara_force_term: n must be >= 0");
    const double t_n = 2.0 * matsubara_frequency(temperature, n) * g.separation / si.c;
    const double weight = n == 0 ? 0.5 : 1.0;
    const TermEval te = eval_term(m1, m2, g, t_n, q.rel_tol / 20.0, 0.0, q.max_subdivisions);
    if (!te.converged)
        throw ConvergenceError("matsubara_force_term: quadrature did not converge",
                               thermal_prefactor(g, temperature) * weight * te.value,
                               te.value == 0.0 ? 0.0 : te.abs_err / std::abs(te.value));
    return thermal_prefactor(g, temperature) * weight * te.value;
}

ForceResult casimir_force_thermal(const MirrorModel& m1, const MirrorModel& m2,
                                  const CavityGeometry& g, const ThermalSpec& spec,
                                  const QuadratureSpec& q) {
    if (spec.temperature < 0.0)
        throw std::invalid_argument("ThermalSpec: temperature must be >= 0");
    if (spec.n_max < 0) throw std::invalid_argument("ThermalSpec: n_max must be >= 0");
    if (!(spec.tail_tol > 0.0)) throw std::invalid_argument("ThermalSpec: tail_tol must be > 0");
    if (spec.temperature == 0.0) return casimir_force_scattering(m1, m2, g, q);

    const double inner_rel = q.rel_tol / 20.0;
    const double dt = 4.0 * pi * si.k_B * spec.temperature * g.separation / (si.hbar * si.c);

    // n = 0 term also fixes the magnitude scale for the absolute floor
    TermEval t0 = eval_term(m1, m2, g, 0.0, inner_rel, 0.0, q.max_subdivisions);
    const double floor = std::abs(t0.value) * inner_rel * 1e-2;

    double sum = 0.5 * t0.value;
    double err_sum = 0.5 * t0.abs_err;
    bool quad_ok = t0.converged;
    double tail_bound = 0.0;
    bool tail_ok = false;

    // default cutoff: smallest n with xi_n L / c > 30, i.e. t_n > 60
    constexpr long hard_cap = 10'000'000;
    const long limit = spec.n_max > 0
                           ? spec.n_max
                           : std::min(static_cast<long>(std::floor(60.0 / dt)) + 1, hard_cap);
    for (long n = 1; n <= limit; ++n) {
        const double t_n = n * dt;
        const TermEval te = eval_term(m1, m2, g, t_n, inner_rel, floor, q.max_subdivisions);
        sum += te.value;
        err_sum += te.abs_err;
        quad_ok = quad_ok && te.converged;

        const double r = term_decay_ratio(t_n, dt);
        tail_bound = r < 1.0 ? std::abs(te.value) * r / (1.0 - r)
                             : std::numeric_limits<double>::infinity();
        if (sum == 0.0 && te.value == 0.0) tail_bound = 0.0;  // inert mirrors
        tail_ok = tail_bound <= spec.tail_tol * std::abs(sum);
        if (tail_ok) break;
    }

    ForceResult res{};
    res.force = thermal_prefactor(g, spec.temperature) * sum;
    res.pressure = res.force / g.area;
    res.eta = res.force / ideal_casimir_force(g);
    res.err_est = sum == 0.0 ? 0.0 : (err_sum + tail_bound) / std::abs(sum) + 2.0 * inner_rel;
    if (!tail_ok)
        throw ConvergenceError(
            "casimir_force_thermal: Matsubara sum truncated at n_max = " +
                std::to_string(limit) + " leaves a tail above tail_tol; raise n_max",
            res.force, res.err_est);
    if (!quad_ok)
        throw ConvergenceError("casimir_force_thermal: term quadrature did not converge",
                               res.force, res.err_est);
    return res;
}

double thermal_correction_ratio(const MirrorModel& m1, const MirrorModel& m2,
                                const CavityGeometry& g, const ThermalSpec& spec,
                                const QuadratureSpec& q) {
    const double f0 = casimir_force_scattering(m1, m2, g, q).force;
    if (f0 == 0.0)
        throw std::invalid_argument(
            "thermal_correction_ratio: zero-temperature force vanishes for these mirrors");
    const double ft = casimir_force_thermal(m1, m2, g, spec, q).force;
    return (ft - f0) / f0;
}

double casimir_energy_thermal(const MirrorModel& m1, const MirrorModel& m2,
                              const CavityGeometry& g, const ThermalSpec& spec,
                              const QuadratureSpec& q) {
    if (spec.temperature == 0.0) return casimir_energy_scattering(m1, m2, g, q);
    // E(L) = int_L^inf F(L') dL' = int_0^1 F(L/u) L/u^2 du
    const double L = g.separation;
    const double outer_rel = std::max(q.rel_tol, 1e-7);
    auto f = [&](double u) {
        const CavityGeometry gu(g.area, L / u);
        return casimir_force_thermal(m1, m2, gu, spec, q).force * L / (u * u);
    };
    const double ref = casimir_force_thermal(m1, m2, g, spec, q).force * L;
    const quad::Result r = quad::integrate(f, 0.0, 1.0, outer_rel, std::abs(ref) * outer_rel,
                                           q.max_subdivisions);
    if (!r.converged)
        throw ConvergenceError("casimir_energy_thermal: quadrature did not converge", r.value,
                               r.value == 0.0 ? 0.0 : r.abs_err / std::abs(r.value));
    return r.value;
}

double classical_limit_force(const CavityGeometry& g, double temperature) {
    if (temperature < 0.0)
        throw std::invalid_argument("classical_limit_force: temperature must be >= 0");
    const double L = g.separation;
    return zeta3 * si.k_B * temperature * g.area / (4.0 * pi * L * L * L);
}

}  // namespace casimir
