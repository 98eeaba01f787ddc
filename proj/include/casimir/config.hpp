#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/mirrors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/thermal.hpp"

/// Flat key-value run configuration. Files hold one `key = value` pair per
/// line with dotted section keys (`geometry.L_m = 1e-6`); `#` starts a
/// comment. Units are part of the key name (`_m`, `_K`, `_rad_per_s`) so a
/// config never carries an implicit unit.

namespace casimir {

enum class Quantity {
    force,         ///< plane-plane force [N]
    energy,        ///< plane-plane binding energy [J]
    eta,           ///< reduction factor vs perfect mirrors
    thermal_ratio, ///< (F_T - F_0)/F_0
    sphere_force,  ///< plane-sphere force via proximity approximation [N]
    chi_vac,       ///< Im chi, vacuum motional susceptibility [N/m]
    chi_bbr,       ///< Im chi, thermal motional susceptibility [N/m]
    mu,            ///< cavity mass correction [kg]
    bbr_density,   ///< black-body energy density [J/m^3]
};

enum class SweepAxis { L, T, Omega, omega_p };
enum class SweepScale { linear, log };

struct SweepRange {
    SweepAxis axis;
    double start;
    double stop;
    int points;
    SweepScale scale;
};

struct RunConfig {
    Quantity quantity;
    std::optional<double> separation;   ///< geometry.L_m
    std::optional<double> area;         ///< geometry.A_m2
    std::optional<double> radius;       ///< geometry.R_m, sphere only
    std::optional<double> temperature;  ///< temperature_K; absent means 0 K
    std::optional<double> omega;        ///< motional.Omega_rad_per_s
    MirrorModel mirror1 = PerfectMirror{};
    MirrorModel mirror2 = PerfectMirror{};
    QuadratureSpec quad;
    int n_max = 0;
    double tail_tol = 1e-9;
    std::optional<SweepRange> sweep;

    /// Key-value pairs as read, in file order; echoed into outputs.
    std::vector<std::pair<std::string, std::string>> raw;

    double temperature_or_zero() const { return temperature.value_or(0.0); }
    ThermalSpec thermal_spec() const { return {temperature_or_zero(), n_max, tail_tol}; }
};

const char* quantity_name(Quantity q);
const char* quantity_column(Quantity q);  ///< result column name with unit
const char* axis_name(SweepAxis a);
const char* axis_column(SweepAxis a);  ///< axis column name with unit
const char* axis_unit_suffix(SweepAxis a);

/// Reads a config file; IoError when unreadable, ConfigError on syntax
/// problems (line number in the message).
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Validates keys and builds the run description. Unknown keys, duplicate
/// keys, missing required keys, and out-of-domain values raise ConfigError
/// naming the offending key path.
RunConfig build_run_config(const std::vector<std::pair<std::string, std::string>>& entries);

/// Axis grid, points >= 2, deterministic; log scale requires start > 0.
std::vector<double> sweep_grid(const SweepRange& r);

/// Copy of cfg with the sweep axis applied at value x.
RunConfig at_axis_value(const RunConfig& cfg, double x);

}  // namespace casimir
