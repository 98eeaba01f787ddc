#include "casimir/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(x))
        throw ConfigError(key + ": not a finite number: '" + value + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long x = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE || x > 1'000'000'000 ||
        x < -1'000'000'000)
        throw ConfigError(key + ": not an integer: '" + value + "'");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

// Consumption-tracking view over the parsed pairs; anything not taken by
// the schema is reported as unknown.
struct KeyBag {
    std::map<std::string, std::string> kv;
    std::set<std::string> used;

    explicit KeyBag(const std::vector<std::pair<std::string, std::string>>& entries) {
        for (const auto& [k, v] : entries)
            if (!kv.emplace(k, v).second) throw ConfigError("duplicate key: " + k);
    }

    std::optional<std::string> take(const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        used.insert(key);
        return it->second;
    }

    std::string require(const std::string& key) {
        auto v = take(key);
        if (!v) throw ConfigError("missing required key: " + key);
        return *v;
    }

    std::optional<double> take_double(const std::string& key) {
        auto v = take(key);
        if (!v) return std::nullopt;
        return parse_double(key, *v);
    }

    std::optional<int> take_int(const std::string& key) {
        auto v = take(key);
        if (!v) return std::nullopt;
        return parse_int(key, *v);
    }

    std::optional<bool> take_bool(const std::string& key) {
        auto v = take(key);
        if (!v) return std::nullopt;
        return parse_bool(key, *v);
    }

    void finish() const {
        for (const auto& [k, v] : kv)
            if (!used.count(k)) throw ConfigError("unknown or unused key: " + k);
    }
};

Quantity parse_quantity(const std::string& v) {
    if (v == "force") return Quantity::force;
    if (v == "energy") return Quantity::energy;
    if (v == "eta") return Quantity::eta;
    if (v == "thermal_ratio") return Quantity::thermal_ratio;
    if (v == "sphere_force") return Quantity::sphere_force;
    if (v == "chi_vac") return Quantity::chi_vac;
    if (v == "chi_bbr") return Quantity::chi_bbr;
    if (v == "mu") return Quantity::mu;
    if (v == "bbr_density") return Quantity::bbr_density;
    throw ConfigError(
        "quantity: expected one of force, energy, eta, thermal_ratio, sphere_force, "
        "chi_vac, chi_bbr, mu, bbr_density; got '" +
        v + "'");
}

SweepAxis parse_axis(const std::string& v) {
    if (v == "L") return SweepAxis::L;
    if (v == "T") return SweepAxis::T;
    if (v == "Omega") return SweepAxis::Omega;
    if (v == "omega_p") return SweepAxis::omega_p;
    throw ConfigError("sweep.axis: expected one of L, T, Omega, omega_p; got '" + v + "'");
}

double require_positive(const std::string& key, double x) {
    if (!(x > 0.0)) throw ConfigError(key + ": must be > 0");
    return x;
}

double require_nonnegative(const std::string& key, double x) {
    if (x < 0.0) throw ConfigError(key + ": must be >= 0");
    return x;
}

// default_omega_p supplies a placeholder when the plasma frequency is the
// sweep axis and no fixed value is given.
std::optional<MirrorModel> build_mirror(KeyBag& bag, const std::string& prefix,
                                        std::optional<double> default_omega_p) {
    const auto model = bag.take(prefix + ".model");
    if (!model) return std::nullopt;
    auto omega_p = [&]() -> double {
        const std::string key = prefix + ".omega_p_rad_per_s";
        if (auto v = bag.take(key)) return parse_double(key, *v);
        if (default_omega_p) return *default_omega_p;
        throw ConfigError("missing required key: " + key);
    };
    try {
        if (*model == "perfect") return MirrorModel{PerfectMirror{}};
        if (*model == "gold") return MirrorModel{gold_plasma()};
        if (*model == "copper") return MirrorModel{copper_plasma()};
        if (*model == "scalar")
            return MirrorModel{
                ScalarMirror(parse_double(prefix + ".r0", bag.require(prefix + ".r0")))};
        if (*model == "plasma") return MirrorModel{PlasmaMirror(omega_p())};
        if (*model == "drude")
            return MirrorModel{DrudeMirror(
                omega_p(), parse_double(prefix + ".gamma_rad_per_s",
                                        bag.require(prefix + ".gamma_rad_per_s")))};
        if (*model == "tabulated") {
            const std::string path = bag.require(prefix + ".table_path");
            const bool clamp = bag.take_bool(prefix + ".clamp_ends").value_or(false);
            return load_tabulated_permittivity(path, clamp);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(prefix + ": " + e.what());
    }
    throw ConfigError(prefix +
                      ".model: expected one of perfect, scalar, plasma, drude, tabulated, "
                      "gold, copper; got '" +
                      *model + "'");
}

bool needs_mirrors(Quantity q) {
    switch (q) {
        case Quantity::force:
        case Quantity::energy:
        case Quantity::eta:
        case Quantity::thermal_ratio:
        case Quantity::sphere_force:
            return true;
        default:
            return false;
    }
}

bool axis_applies(Quantity q, SweepAxis a) {
    switch (a) {
        case SweepAxis::L:
            return q == Quantity::force || q == Quantity::energy || q == Quantity::eta ||
                   q == Quantity::thermal_ratio || q == Quantity::sphere_force ||
                   q == Quantity::mu;
        case SweepAxis::T:
            return q == Quantity::force || q == Quantity::energy || q == Quantity::eta ||
                   q == Quantity::thermal_ratio || q == Quantity::sphere_force ||
                   q == Quantity::chi_bbr || q == Quantity::bbr_density;
        case SweepAxis::Omega:
            return q == Quantity::chi_vac || q == Quantity::chi_bbr;
        case SweepAxis::omega_p:
            return q == Quantity::force || q == Quantity::energy || q == Quantity::eta ||
                   q == Quantity::thermal_ratio || q == Quantity::sphere_force;
    }
    return false;
}

}  // namespace

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::force: return "force";
        case Quantity::energy: return "energy";
        case Quantity::eta: return "eta";
        case Quantity::thermal_ratio: return "thermal_ratio";
        case Quantity::sphere_force: return "sphere_force";
        case Quantity::chi_vac: return "chi_vac";
        case Quantity::chi_bbr: return "chi_bbr";
        case Quantity::mu: return "mu";
        case Quantity::bbr_density: return "bbr_density";
    }
    return "?";
}

const char* quantity_column(Quantity q) {
    switch (q) {
        case Quantity::force: return "force_N";
        case Quantity::energy: return "energy_J";
        case Quantity::eta: return "eta";
        case Quantity::thermal_ratio: return "thermal_ratio";
        case Quantity::sphere_force: return "sphere_force_N";
        case Quantity::chi_vac: return "chi_vac_im_N_per_m";
        case Quantity::chi_bbr: return "chi_bbr_im_N_per_m";
        case Quantity::mu: return "mu_kg";
        case Quantity::bbr_density: return "energy_density_J_per_m3";
    }
    return "?";
}

const char* axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::L: return "L";
        case SweepAxis::T: return "T";
        case SweepAxis::Omega: return "Omega";
        case SweepAxis::omega_p: return "omega_p";
    }
    return "?";
}

const char* axis_column(SweepAxis a) {
    switch (a) {
        case SweepAxis::L: return "L_m";
        case SweepAxis::T: return "T_K";
        case SweepAxis::Omega: return "Omega_rad_per_s";
        case SweepAxis::omega_p: return "omega_p_rad_per_s";
    }
    return "?";
}

const char* axis_unit_suffix(SweepAxis a) {
    switch (a) {
        case SweepAxis::L: return "_m";
        case SweepAxis::T: return "_K";
        case SweepAxis::Omega: return "_rad_per_s";
        case SweepAxis::omega_p: return "_rad_per_s";
    }
    return "";
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": empty key or value in '" + line + "'");
        entries.emplace_back(key, value);
    }
    if (in.bad()) throw IoError("read failure on config file: " + path);
    return entries;
}

RunConfig build_run_config(const std::vector<std::pair<std::string, std::string>>& entries) {
    KeyBag bag(entries);
    RunConfig cfg{};
    cfg.raw = entries;
    cfg.quantity = parse_quantity(bag.require("quantity"));

    cfg.separation = bag.take_double("geometry.L_m");
    if (cfg.separation) require_positive("geometry.L_m", *cfg.separation);
    cfg.area = bag.take_double("geometry.A_m2");
    if (cfg.area) require_positive("geometry.A_m2", *cfg.area);
    cfg.radius = bag.take_double("geometry.R_m");
    if (cfg.radius) require_positive("geometry.R_m", *cfg.radius);
    cfg.temperature = bag.take_double("temperature_K");
    if (cfg.temperature) require_nonnegative("temperature_K", *cfg.temperature);
    cfg.omega = bag.take_double("motional.Omega_rad_per_s");
    if (cfg.omega) require_nonnegative("motional.Omega_rad_per_s", *cfg.omega);

    if (auto v = bag.take_double("quadrature.rel_tol")) {
        if (!(*v > 0.0 && *v < 1.0)) throw ConfigError("quadrature.rel_tol: must be in (0, 1)");
        cfg.quad.rel_tol = *v;
    }
    if (auto v = bag.take_int("quadrature.max_subdivisions")) {
        if (*v < 1) throw ConfigError("quadrature.max_subdivisions: must be >= 1");
        cfg.quad.max_subdivisions = *v;
    }
    if (auto v = bag.take_double("quadrature.xi_scale_rad_per_s")) {
        cfg.quad.xi_scale = require_nonnegative("quadrature.xi_scale_rad_per_s", *v);
    }
    if (auto v = bag.take_int("thermal.n_max")) {
        if (*v < 0) throw ConfigError("thermal.n_max: must be >= 0 (0 = automatic)");
        cfg.n_max = *v;
    }
    if (auto v = bag.take_double("thermal.tail_tol")) {
        cfg.tail_tol = require_positive("thermal.tail_tol", *v);
    }

    if (auto axis = bag.take("sweep.axis")) {
        SweepRange r{};
        r.axis = parse_axis(*axis);
        if (!axis_applies(cfg.quantity, r.axis))
            throw ConfigError(std::string("sweep.axis: axis ") + axis_name(r.axis) +
                              " does not vary quantity " + quantity_name(cfg.quantity));
        const std::string suffix = axis_unit_suffix(r.axis);
        r.start = parse_double("sweep.start" + suffix, bag.require("sweep.start" + suffix));
        r.stop = parse_double("sweep.stop" + suffix, bag.require("sweep.stop" + suffix));
        const int points = parse_int("sweep.points", bag.require("sweep.points"));
        if (points < 2) throw ConfigError("sweep.points: must be >= 2");
        r.points = points;
        const std::string scale = bag.take("sweep.scale").value_or("linear");
        if (scale == "linear")
            r.scale = SweepScale::linear;
        else if (scale == "log")
            r.scale = SweepScale::log;
        else
            throw ConfigError("sweep.scale: expected linear or log, got '" + scale + "'");
        if (!(r.start < r.stop))
            throw ConfigError("sweep.start" + suffix + ": must be < sweep.stop" + suffix);
        if (r.scale == SweepScale::log && !(r.start > 0.0))
            throw ConfigError("sweep.start" + suffix + ": must be > 0 for log scale");
        if ((r.axis == SweepAxis::L || r.axis == SweepAxis::omega_p) && !(r.start > 0.0))
            throw ConfigError("sweep.start" + suffix + ": must be > 0");
        if (r.axis == SweepAxis::T && r.start < 0.0)
            throw ConfigError("sweep.start" + suffix + ": must be >= 0");
        cfg.sweep = r;
    }
    const auto axis_is = [&](SweepAxis a) { return cfg.sweep && cfg.sweep->axis == a; };

    const std::optional<double> default_omega_p =
        axis_is(SweepAxis::omega_p) ? std::optional<double>(cfg.sweep->start) : std::nullopt;
    auto m1 = build_mirror(bag, "mirror1", default_omega_p);
    auto m2 = build_mirror(bag, "mirror2", default_omega_p);
    if (needs_mirrors(cfg.quantity)) {
        if (!m1) throw ConfigError("missing required key: mirror1.model");
        cfg.mirror1 = *m1;
        cfg.mirror2 = m2 ? *m2 : *m1;
    } else if (m1 || m2) {
        throw ConfigError(std::string("mirror models are not used by quantity ") +
                          quantity_name(cfg.quantity));
    }
    if (axis_is(SweepAxis::omega_p) &&
        !(std::holds_alternative<PlasmaMirror>(cfg.mirror1) ||
          std::holds_alternative<DrudeMirror>(cfg.mirror1)))
        throw ConfigError("sweep.axis: omega_p requires mirror1.model plasma or drude");

    // per-quantity requirements; a field supplied by the sweep axis is exempt
    auto need = [&](const std::optional<double>& field, SweepAxis provider, const char* key) {
        if (!field && !axis_is(provider))
            throw ConfigError(std::string("missing required key: ") + key);
    };
    switch (cfg.quantity) {
        case Quantity::force:
        case Quantity::energy:
        case Quantity::eta:
            need(cfg.separation, SweepAxis::L, "geometry.L_m");
            if (!cfg.area) throw ConfigError("missing required key: geometry.A_m2");
            break;
        case Quantity::thermal_ratio:
            need(cfg.separation, SweepAxis::L, "geometry.L_m");
            if (!cfg.area) throw ConfigError("missing required key: geometry.A_m2");
            need(cfg.temperature, SweepAxis::T, "temperature_K");
            break;
        case Quantity::sphere_force:
            need(cfg.separation, SweepAxis::L, "geometry.L_m");
            if (!cfg.radius) throw ConfigError("missing required key: geometry.R_m");
            break;
        case Quantity::chi_vac:
            if (!cfg.area) throw ConfigError("missing required key: geometry.A_m2");
            need(cfg.omega, SweepAxis::Omega, "motional.Omega_rad_per_s");
            break;
        case Quantity::chi_bbr:
            if (!cfg.area) throw ConfigError("missing required key: geometry.A_m2");
            need(cfg.omega, SweepAxis::Omega, "motional.Omega_rad_per_s");
            need(cfg.temperature, SweepAxis::T, "temperature_K");
            break;
        case Quantity::mu:
            need(cfg.separation, SweepAxis::L, "geometry.L_m");
            if (!cfg.area) throw ConfigError("missing required key: geometry.A_m2");
            break;
        case Quantity::bbr_density:
            need(cfg.temperature, SweepAxis::T, "temperature_K");
            break;
    }

    bag.finish();
    return cfg;
}

std::vector<double> sweep_grid(const SweepRange& r) {
    std::vector<double> xs(static_cast<std::size_t>(r.points));
    const int n = r.points - 1;
    for (int i = 0; i <= n; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(n);
        xs[static_cast<std::size_t>(i)] =
            r.scale == SweepScale::linear
                ? r.start + (r.stop - r.start) * f
                : std::exp(std::log(r.start) + (std::log(r.stop) - std::log(r.start)) * f);
    }
    xs.front() = r.start;
    xs.back() = r.stop;
    return xs;
}

RunConfig at_axis_value(const RunConfig& cfg, double x) {
    RunConfig out = cfg;
    if (!cfg.sweep) return out;
    switch (cfg.sweep->axis) {
        case SweepAxis::L:
            out.separation = x;
            break;
        case SweepAxis::T:
            out.temperature = x;
            break;
        case SweepAxis::Omega:
            out.omega = x;
            break;
        case SweepAxis::omega_p: {
            auto retune = [x](MirrorModel& m) {
                if (std::holds_alternative<PlasmaMirror>(m))
                    m = PlasmaMirror(x);
                else if (const auto* d = std::get_if<DrudeMirror>(&m))
                    m = DrudeMirror(x, d->gamma);
            };
            retune(out.mirror1);
            retune(out.mirror2);
            break;
        }
    }
    return out;
}

}  // namespace casimir
