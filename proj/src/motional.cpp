#include "casimir/motional.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

// F(t) = -coef * q'(t) in the high-temperature limit
double thermal_coefficient(double area, double temperature) {
    const double s = si.k_B * temperature / (si.hbar * si.c);
    return pi * pi * si.hbar * area / 15.0 * (s * s) * (s * s);
}

// F(t) = -coef * q'''''(t) in vacuum
double vacuum_coefficient(double area) {
    const double c2 = si.c * si.c;
    return si.hbar * area / (60.0 * pi * pi * c2 * c2);
}

// Least-squares polynomial fit of degree <= 4 on x in [-1, 1]. Returns
// monomial coefficients; the fit residual decides whether the record is a
// polynomial trend (derivatives beyond the fourth vanish identically).
struct PolyFit {
    std::array<double, 5> coeff;
    double max_residual;
};

PolyFit fit_quartic(const std::vector<double>& q) {
    const std::size_t n = q.size();
    std::array<std::array<double, 5>, 5> gram{};
    std::array<double, 5> rhs{};
    for (std::size_t j = 0; j < n; ++j) {
        const double x = 2.0 * static_cast<double>(j) / static_cast<double>(n - 1) - 1.0;
        std::array<double, 5> p{1.0, x, x * x, x * x * x, x * x * x * x};
        for (int a = 0; a < 5; ++a) {
            rhs[a] += p[a] * q[j];
            for (int b = 0; b < 5; ++b) gram[a][b] += p[a] * p[b];
        }
    }
    // 5x5 Gaussian elimination with partial pivoting
    std::array<std::array<double, 6>, 5> m{};
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) m[a][b] = gram[a][b];
        m[a][5] = rhs[a];
    }
    for (int col = 0; col < 5; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        for (int r = col + 1; r < 5; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int b = col; b < 6; ++b) m[r][b] -= f * m[col][b];
        }
    }
    PolyFit out{};
    for (int col = 4; col >= 0; --col) {
        double s = m[col][5];
        for (int b = col + 1; b < 5; ++b) s -= m[col][b] * out.coeff[b];
        out.coeff[col] = s / m[col][col];
    }
    out.max_residual = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double x = 2.0 * static_cast<double>(j) / static_cast<double>(n - 1) - 1.0;
        double fit = 0.0;
        for (int a = 4; a >= 0; --a) fit = fit * x + out.coeff[a];
        out.max_residual = std::max(out.max_residual, std::abs(q[j] - fit));
    }
    return out;
}

void validate_sampled(const SampledTrajectory& tr) {
    if (!(tr.dt > 0.0)) throw std::invalid_argument("SampledTrajectory: dt must be > 0");
    if (tr.positions.size() < 8)
        throw std::invalid_argument(
            "SampledTrajectory: spectral evaluation needs at least 8 samples");
}

}  // namespace

MotionalSpec::MotionalSpec(double area_m2, double omega_rad_per_s, double temperature_K)
    : area(area_m2), omega(omega_rad_per_s), temperature(temperature_K) {
    if (!(area > 0.0)) throw std::invalid_argument("MotionalSpec: area must be > 0");
    if (omega < 0.0) throw std::invalid_argument("MotionalSpec: omega must be >= 0");
    if (temperature < 0.0)
        throw std::invalid_argument("MotionalSpec: temperature must be >= 0");
}

bool MotionalSpec::geometry_regime_ok() const {
    if (omega == 0.0) return false;
    return area * omega * omega >= 10.0 * si.c * si.c;
}

bool MotionalSpec::thermal_regime_ok() const {
    return geometry_regime_ok() && si.k_B * temperature >= 10.0 * si.hbar * omega;
}

bool MotionalSpec::vacuum_regime_ok() const {
    return geometry_regime_ok() && si.hbar * omega >= 10.0 * si.k_B * temperature;
}

std::complex<double> thermal_susceptibility_at(double area, double temperature, double omega) {
    return cd{0.0, thermal_coefficient(area, temperature) * omega};
}

std::complex<double> vacuum_susceptibility_at(double area, double omega) {
    const double w2 = omega * omega;
    return cd{0.0, vacuum_coefficient(area) * w2 * w2 * omega};
}

std::complex<double> thermal_motional_susceptibility(const MotionalSpec& s) {
    return thermal_susceptibility_at(s.area, s.temperature, s.omega);
}

std::complex<double> vacuum_motional_susceptibility(const MotionalSpec& s) {
    return vacuum_susceptibility_at(s.area, s.omega);
}

double radiation_reaction_force_at(const MonochromaticTrajectory& tr, const MotionalSpec& s,
                                   MotionalRegime regime, double t) {
    if (tr.omega < 0.0)
        throw std::invalid_argument("MonochromaticTrajectory: omega must be >= 0");
    const cd chi = regime == MotionalRegime::vacuum
                       ? vacuum_susceptibility_at(s.area, tr.omega)
                       : thermal_susceptibility_at(s.area, s.temperature, tr.omega);
    // q(t) = Re[q0 e^{-i omega t}]
    return (chi * tr.q0 * std::exp(cd{0.0, -tr.omega * t})).real();
}

std::vector<double> radiation_reaction_force(const SampledTrajectory& tr, const MotionalSpec& s,
                                             MotionalRegime regime) {
    validate_sampled(tr);
    const std::size_t n = tr.positions.size();
    if (s.omega > pi / tr.dt * (1.0 + 1e-12))
        throw std::domain_error(
            "radiation_reaction_force: drive frequency exceeds the Nyquist rate pi/dt; "
            "the sampled record aliases");

    double q_max = 0.0;
    for (double q : tr.positions) q_max = std::max(q_max, std::abs(q));
    if (q_max == 0.0) return std::vector<double>(n, 0.0);

    const PolyFit fit = fit_quartic(tr.positions);
    if (fit.max_residual <= 1e-12 * q_max) {
        // polynomial trend: the fifth derivative vanishes, so no vacuum
        // force; the thermal force follows from the fitted derivative
        std::vector<double> force(n, 0.0);
        if (regime == MotionalRegime::thermal) {
            const double coef = thermal_coefficient(s.area, s.temperature);
            const double dx_dt = 2.0 / (static_cast<double>(n - 1) * tr.dt);
            for (std::size_t j = 0; j < n; ++j) {
                const double x =
                    2.0 * static_cast<double>(j) / static_cast<double>(n - 1) - 1.0;
                const double dq_dx = fit.coeff[1] + x * (2.0 * fit.coeff[2] +
                                     x * (3.0 * fit.coeff[3] + x * 4.0 * fit.coeff[4]));
                force[j] = -coef * dq_dx * dx_dt;
            }
        }
        return force;
    }

    // windowless discrete transform; the record is taken as one period
    const double nd = static_cast<double>(n);
    std::vector<cd> spectrum(n);
    for (std::size_t m = 0; m < n; ++m) {
        cd acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double ph = -2.0 * pi * static_cast<double>(j) * static_cast<double>(m) / nd;
            acc += tr.positions[j] * cd{std::cos(ph), std::sin(ph)};
        }
        spectrum[m] = acc;
    }
    std::vector<double> force(n, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        if (n % 2 == 0 && m == n / 2) continue;  // Nyquist bin has no signed frequency
        const double ms = m <= n / 2 ? static_cast<double>(m)
                                     : static_cast<double>(m) - nd;
        const double w = 2.0 * pi * ms / (nd * tr.dt);
        // components vary as e^{+i w t}; the kernel for that convention is
        // the conjugate of chi
        const cd mult = std::conj(regime == MotionalRegime::vacuum
                                      ? vacuum_susceptibility_at(s.area, w)
                                      : thermal_susceptibility_at(s.area, s.temperature, w));
        const cd amp = mult * spectrum[m] / nd;
        for (std::size_t j = 0; j < n; ++j) {
            const double ph = 2.0 * pi * static_cast<double>(j) * static_cast<double>(m) / nd;
            force[j] += (amp * cd{std::cos(ph), std::sin(ph)}).real();
        }
    }
    return force;
}

std::vector<double> radiation_reaction_force(const Trajectory& tr, const MotionalSpec& s,
                                             MotionalRegime regime) {
    if (const auto* sampled = std::get_if<SampledTrajectory>(&tr))
        return radiation_reaction_force(*sampled, s, regime);
    const auto& mono = std::get<MonochromaticTrajectory>(tr);
    if (mono.omega == 0.0) return {0.0};
    std::vector<double> force(64);
    const double period = 2.0 * pi / mono.omega;
    for (std::size_t j = 0; j < force.size(); ++j)
        force[j] = radiation_reaction_force_at(mono, s, regime,
                                               period * static_cast<double>(j) / 64.0);
    return force;
}

InertiaResult casimir_inertia_correction(const CavityGeometry& g) {
    InertiaResult r{};
    r.e_cas = ideal_casimir_energy(g);
    r.f_cas_L = ideal_casimir_force(g) * g.separation;
    r.mu = (r.e_cas - r.f_cas_L) / (si.c * si.c);
    return r;
}

}  // namespace casimir
