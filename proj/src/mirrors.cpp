#include "casimir/mirrors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "casimir/errors.hpp"

namespace casimir {

ScalarMirror::ScalarMirror(double r0_) : r0(r0_) {
    if (!(std::abs(r0) <= 1.0))
        throw std::invalid_argument("ScalarMirror: |r0| must be <= 1");
}

PlasmaMirror::PlasmaMirror(double omega_p_) : omega_p(omega_p_) {
    if (!(omega_p > 0.0)) throw std::invalid_argument("PlasmaMirror: omega_p must be > 0");
}

DrudeMirror::DrudeMirror(double omega_p_, double gamma_) : omega_p(omega_p_), gamma(gamma_) {
    if (!(omega_p > 0.0)) throw std::invalid_argument("DrudeMirror: omega_p must be > 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("DrudeMirror: gamma must be >= 0");
}

TabulatedMirror::TabulatedMirror(std::vector<double> xi_grid, std::vector<double> eps_grid,
                                 bool clamp_ends_)
    : xi(std::move(xi_grid)), eps(std::move(eps_grid)), clamp_ends(clamp_ends_) {
    if (xi.size() != eps.size() || xi.size() < 2)
        throw std::invalid_argument("TabulatedMirror: need >= 2 (xi, eps) rows");
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (!(xi[i] > 0.0)) throw std::invalid_argument("TabulatedMirror: xi must be > 0");
        if (!(eps[i] >= 1.0)) throw std::invalid_argument("TabulatedMirror: eps must be >= 1");
        if (i > 0 && !(xi[i] > xi[i - 1]))
            throw std::invalid_argument("TabulatedMirror: xi grid must be strictly increasing");
    }
}

namespace {

double tabulated_eps(const TabulatedMirror& t, double xi) {
    if (xi < t.xi.front() || xi > t.xi.back()) {
        if (!t.clamp_ends)
            throw std::domain_error("TabulatedMirror: xi outside grid (clamp_ends not set)");
        return xi < t.xi.front() ? t.eps.front() : t.eps.back();
    }
    const auto it = std::upper_bound(t.xi.begin(), t.xi.end(), xi);
    const std::size_t hi = std::min<std::size_t>(it - t.xi.begin(), t.xi.size() - 1);
    const std::size_t lo = hi - 1;
    // log-log linear; eps >= 1 keeps the logs finite
    const double w = (std::log(xi) - std::log(t.xi[lo])) /
                     (std::log(t.xi[hi]) - std::log(t.xi[lo]));
    return std::exp((1.0 - w) * std::log(t.eps[lo]) + w * std::log(t.eps[hi]));
}

double fresnel(double eps, double xi, double k, Polarization p) {
    const double kappa = std::hypot(k, xi / si.c);
    const double kappa_m = std::sqrt(k * k + eps * (xi / si.c) * (xi / si.c));
    if (p == Polarization::TE) return (kappa - kappa_m) / (kappa + kappa_m);
    return (eps * kappa - kappa_m) / (eps * kappa + kappa_m);
}

void check_mode(FieldModeIm m) {
    if (!(m.xi >= 0.0) || !(m.k >= 0.0))
        throw std::invalid_argument("FieldModeIm: xi and k must be >= 0");
}

}  // namespace

double permittivity_im(const MirrorModel& model, double xi) {
    if (!(xi >= 0.0)) throw std::invalid_argument("permittivity_im: xi must be >= 0");
    return std::visit(
        [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, PlasmaMirror>) {
                if (xi == 0.0) return std::numeric_limits<double>::infinity();
                return 1.0 + (m.omega_p / xi) * (m.omega_p / xi);
            } else if constexpr (std::is_same_v<M, DrudeMirror>) {
                if (xi == 0.0) return std::numeric_limits<double>::infinity();
                return 1.0 + m.omega_p * m.omega_p / (xi * (xi + m.gamma));
            } else if constexpr (std::is_same_v<M, TabulatedMirror>) {
                return tabulated_eps(m, xi);
            } else {
                throw std::invalid_argument(
                    "permittivity_im: model has no permittivity (Perfect/Scalar)");
            }
        },
        model);
}

double reflection_amplitude(const MirrorModel& model, FieldModeIm mode) {
    check_mode(mode);
    return std::visit(
        [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, PerfectMirror>) {
                return mode.p == Polarization::TE ? -1.0 : 1.0;
            } else if constexpr (std::is_same_v<M, ScalarMirror>) {
                return m.r0;
            } else if constexpr (std::is_same_v<M, PlasmaMirror>) {
                if (mode.xi == 0.0) {
                    if (mode.p == Polarization::TM) return 1.0;
                    // eps*xi^2 -> omega_p^2 as xi -> 0
                    const double kappa_m = std::hypot(mode.k, m.omega_p / si.c);
                    return (mode.k - kappa_m) / (mode.k + kappa_m);
                }
                return fresnel(permittivity_im(model, mode.xi), mode.xi, mode.k, mode.p);
            } else if constexpr (std::is_same_v<M, DrudeMirror>) {
                if (mode.xi == 0.0) {
                    if (m.gamma == 0.0) {
                        // coincides with the plasma model
                        if (mode.p == Polarization::TM) return 1.0;
                        const double kappa_m = std::hypot(mode.k, m.omega_p / si.c);
                        return (mode.k - kappa_m) / (mode.k + kappa_m);
                    }
                    // eps*xi^2 -> 0: TE transparent, TM -> 1
                    return mode.p == Polarization::TM ? 1.0 : 0.0;
                }
                return fresnel(permittivity_im(model, mode.xi), mode.xi, mode.k, mode.p);
            } else {
                static_assert(std::is_same_v<M, TabulatedMirror>);
                if (mode.xi == 0.0) {
                    // finite eps at xi=0+: kappa_m -> k
                    if (mode.p == Polarization::TM) {
                        const double eps = tabulated_eps(m, m.xi.front());
                        if (mode.k == 0.0) return 1.0;
                        return (eps - 1.0) / (eps + 1.0);
                    }
                    return 0.0;
                }
                return fresnel(tabulated_eps(m, mode.xi), mode.xi, mode.k, mode.p);
            }
        },
        model);
}

MirrorModel load_tabulated_permittivity(const std::filesystem::path& path, bool clamp_ends) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open permittivity table: " + path.string());

    std::vector<double> xi, eps;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        // trim whitespace and skip comments/blanks
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        if (body[0] == '#') continue;
        if (!header_seen) {
            if (body != "xi_rad_per_s,epsilon")
                throw IoError(path.string() + ":" + std::to_string(lineno) +
                              ": expected header 'xi_rad_per_s,epsilon'");
            header_seen = true;
            continue;
        }
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": malformed row");
        std::size_t used1 = 0, used2 = 0;
        double x, e;
        try {
            x = std::stod(body.substr(0, comma), &used1);
            e = std::stod(body.substr(comma + 1), &used2);
        } catch (const std::exception&) {
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": malformed row");
        }
        if (used1 != comma || used2 != body.size() - comma - 1) {
            // allow trailing whitespace only
            const std::string tail1 = body.substr(used1, comma - used1);
            const std::string tail2 = body.substr(comma + 1 + used2);
            if (tail1.find_first_not_of(" \t") != std::string::npos ||
                tail2.find_first_not_of(" \t") != std::string::npos)
                throw IoError(path.string() + ":" + std::to_string(lineno) + ": malformed row");
        }
        if (!(x > 0.0))
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": xi must be > 0");
        if (!(e >= 1.0))
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": epsilon must be >= 1");
        if (!xi.empty() && !(x > xi.back()))
            throw IoError(path.string() + ":" + std::to_string(lineno) +
                          ": xi must be strictly increasing");
        xi.push_back(x);
        eps.push_back(e);
    }
    if (xi.size() < 2)
        throw IoError(path.string() + ": need at least 2 data rows, got " +
                      std::to_string(xi.size()));
    return TabulatedMirror(std::move(xi), std::move(eps), clamp_ends);
}

double plasma_wavelength(double omega_p) {
    if (!(omega_p > 0.0)) throw std::invalid_argument("plasma_wavelength: omega_p must be > 0");
    return 2.0 * std::numbers::pi * si.c / omega_p;
}

double plasma_frequency_from_wavelength(double lambda_p) {
    if (!(lambda_p > 0.0))
        throw std::invalid_argument("plasma_frequency_from_wavelength: lambda_p must be > 0");
    return 2.0 * std::numbers::pi * si.c / lambda_p;
}

PlasmaMirror gold_plasma() { return PlasmaMirror(plasma_frequency_from_wavelength(136e-9)); }

PlasmaMirror copper_plasma() { return PlasmaMirror(plasma_frequency_from_wavelength(137e-9)); }

std::string model_name(const MirrorModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, PerfectMirror>) return "perfect";
            else if constexpr (std::is_same_v<M, ScalarMirror>) return "scalar";
            else if constexpr (std::is_same_v<M, PlasmaMirror>) return "plasma";
            else if constexpr (std::is_same_v<M, DrudeMirror>) return "drude";
            else return "tabulated";
        },
        model);
}

}  // namespace casimir
