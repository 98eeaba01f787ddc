#include "casimir/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "json.hpp"

#include "casimir/errors.hpp"
#include "casimir/motional.hpp"
#include "casimir/pfa.hpp"
#include "casimir/radiometry.hpp"
#include "casimir/scattering.hpp"
#include "casimir/thermal.hpp"
#include "casimir/version.hpp"

namespace casimir {

namespace {

// energy-like quantities report the requested tolerance, not a measured one
double energy_tolerance(const QuadratureSpec& q) { return std::max(q.rel_tol, 1e-7) * 2.0; }

std::string sanitize_csv(const std::string& s) {
    std::string out = s;
    for (char& c : out) {
        if (c == ',') c = ';';
        if (c == '\n' || c == '\r') c = ' ';
    }
    return out;
}

void append_flags(const RunConfig& cfg, std::vector<std::pair<std::string, std::string>>& f) {
    auto flag = [&](const char* name, bool v) { f.emplace_back(name, v ? "true" : "false"); };
    switch (cfg.quantity) {
        case Quantity::force:
        case Quantity::energy:
        case Quantity::eta:
        case Quantity::thermal_ratio: {
            const CavityGeometry g(*cfg.area, *cfg.separation);
            flag("flags.area_regime_ok", g.area_regime_ok());
            break;
        }
        case Quantity::sphere_force: {
            const SphereGeometry sg(*cfg.radius, *cfg.separation);
            flag("flags.pfa_ok", sg.pfa_ok());
            break;
        }
        case Quantity::chi_vac: {
            const MotionalSpec s(*cfg.area, *cfg.omega, cfg.temperature_or_zero());
            flag("flags.vacuum_regime_ok", s.vacuum_regime_ok());
            break;
        }
        case Quantity::chi_bbr: {
            const MotionalSpec s(*cfg.area, *cfg.omega, cfg.temperature_or_zero());
            flag("flags.thermal_regime_ok", s.thermal_regime_ok());
            break;
        }
        case Quantity::mu:
        case Quantity::bbr_density:
            break;
    }
}

}  // namespace

PointResult evaluate_quantity(const RunConfig& cfg) {
    PointResult out{std::numeric_limits<double>::quiet_NaN(), 0.0, {}};
    const double T = cfg.temperature_or_zero();
    switch (cfg.quantity) {
        case Quantity::force: {
            const CavityGeometry g(*cfg.area, *cfg.separation);
            const ForceResult r =
                T > 0.0 ? casimir_force_thermal(cfg.mirror1, cfg.mirror2, g,
                                                cfg.thermal_spec(), cfg.quad)
                        : casimir_force_scattering(cfg.mirror1, cfg.mirror2, g, cfg.quad);
            out.value = r.force;
            out.err_est = r.err_est;
            break;
        }
        case Quantity::energy: {
            const CavityGeometry g(*cfg.area, *cfg.separation);
            out.value = T > 0.0 ? casimir_energy_thermal(cfg.mirror1, cfg.mirror2, g,
                                                         cfg.thermal_spec(), cfg.quad)
                                : casimir_energy_scattering(cfg.mirror1, cfg.mirror2, g,
                                                            cfg.quad);
            out.err_est = energy_tolerance(cfg.quad);
            break;
        }
        case Quantity::eta: {
            const CavityGeometry g(*cfg.area, *cfg.separation);
            const ForceResult r =
                T > 0.0 ? casimir_force_thermal(cfg.mirror1, cfg.mirror2, g,
                                                cfg.thermal_spec(), cfg.quad)
                        : casimir_force_scattering(cfg.mirror1, cfg.mirror2, g, cfg.quad);
            out.value = r.eta;
            out.err_est = r.err_est;
            break;
        }
        case Quantity::thermal_ratio: {
            const CavityGeometry g(*cfg.area, *cfg.separation);
            out.value = thermal_correction_ratio(cfg.mirror1, cfg.mirror2, g,
                                                 cfg.thermal_spec(), cfg.quad);
            out.err_est = 2.0 * cfg.quad.rel_tol;
            break;
        }
        case Quantity::sphere_force: {
            const SphereGeometry sg(*cfg.radius, *cfg.separation);
            out.value = T > 0.0 ? plane_sphere_force_pfa(cfg.mirror1, cfg.mirror2, sg,
                                                         cfg.thermal_spec(), cfg.quad)
                                : plane_sphere_force_pfa(cfg.mirror1, cfg.mirror2, sg,
                                                         cfg.quad);
            out.err_est = energy_tolerance(cfg.quad);
            break;
        }
        case Quantity::chi_vac: {
            const MotionalSpec s(*cfg.area, *cfg.omega, T);
            out.value = vacuum_motional_susceptibility(s).imag();
            break;
        }
        case Quantity::chi_bbr: {
            const MotionalSpec s(*cfg.area, *cfg.omega, T);
            out.value = thermal_motional_susceptibility(s).imag();
            break;
        }
        case Quantity::mu: {
            const CavityGeometry g(*cfg.area, *cfg.separation);
            out.value = casimir_inertia_correction(g).mu;
            break;
        }
        case Quantity::bbr_density:
            out.value = blackbody_energy_density(T);
            break;
    }
    return out;
}

SingleRecord run_single(const RunConfig& cfg) {
    SingleRecord rec;
    rec.result = evaluate_quantity(cfg);
    rec.fields = cfg.raw;
    rec.fields.emplace_back(std::string("result.") + quantity_column(cfg.quantity),
                            format_scientific(rec.result.value));
    rec.fields.emplace_back("result.err_est", format_scientific(rec.result.err_est));
    append_flags(cfg, rec.fields);
    return rec;
}

SweepTable run_sweep(const RunConfig& cfg) {
    if (!cfg.sweep) throw ConfigError("missing required key: sweep.axis");
    SweepTable table;
    table.axis_col = axis_column(cfg.sweep->axis);
    table.value_col = quantity_column(cfg.quantity);
    for (double x : sweep_grid(*cfg.sweep)) {
        SweepRow row{x, {std::numeric_limits<double>::quiet_NaN(), 0.0, {}}};
        try {
            row.point = evaluate_quantity(at_axis_value(cfg, x));
        } catch (const ConvergenceError& e) {
            row.point.value = e.best_estimate;
            row.point.err_est = e.err_est;
            row.point.error = e.what();
        } catch (const std::exception& e) {
            row.point.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const std::vector<std::pair<std::string, std::string>>& raw) {
    std::string normalized;
    for (const auto& [k, v] : raw) {
        normalized += k;
        normalized += " = ";
        normalized += v;
        normalized += '\n';
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(normalized)));
    return buf;
}

std::string format_scientific(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", x);
    return buf;
}

void write_csv(std::ostream& out, const RunConfig& cfg, const SweepTable& table) {
    out << "# casimir " << version << "\n";
    out << "# config_hash = " << config_hash(cfg.raw) << "\n";
    out << "# quantity = " << quantity_name(cfg.quantity) << "\n";
    if (cfg.sweep) out << "# axis = " << axis_name(cfg.sweep->axis) << "\n";
    out << table.axis_col << "," << table.value_col << ",err_est,error\n";
    for (const auto& row : table.rows) {
        out << format_scientific(row.axis_value) << ",";
        out << (std::isnan(row.point.value) ? std::string{}
                                            : format_scientific(row.point.value));
        out << "," << format_scientific(row.point.err_est) << ","
            << sanitize_csv(row.point.error) << "\n";
    }
}

void write_json(std::ostream& out, const RunConfig& cfg, const SweepTable& table) {
    nlohmann::ordered_json doc;
    auto& inputs = doc["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg.raw) inputs[k] = v;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        r[table.axis_col] = row.axis_value;
        if (std::isnan(row.point.value))
            r[table.value_col] = nullptr;
        else
            r[table.value_col] = row.point.value;
        r["err_est"] = row.point.err_est;
        r["error"] = row.point.error;
        rows.push_back(std::move(r));
    }
    auto& meta = doc["meta"] = nlohmann::ordered_json::object();
    meta["tool"] = "casimir";
    meta["version"] = version;
    meta["config_hash"] = config_hash(cfg.raw);
    meta["quantity"] = quantity_name(cfg.quantity);
    if (cfg.sweep) meta["axis"] = axis_name(cfg.sweep->axis);
    out << doc.dump(2) << "\n";
}

}  // namespace casimir
