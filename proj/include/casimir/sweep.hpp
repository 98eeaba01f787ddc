#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/config.hpp"

/// Quantity evaluation and sweep output. All numeric output uses fixed
/// scientific formatting with 9 significant digits, so identical configs
/// produce byte-identical files.

namespace casimir {

struct PointResult {
    double value;
    double err_est;     ///< 0 for closed-form quantities
    std::string error;  ///< empty on success; failed points keep the best estimate or NaN
};

/// Evaluates cfg.quantity at the fixed parameters of cfg. Computation
/// failures propagate as exceptions.
PointResult evaluate_quantity(const RunConfig& cfg);

/// Single-evaluation record: every input echoed, then result and flags.
struct SingleRecord {
    std::vector<std::pair<std::string, std::string>> fields;
    PointResult result;
};

SingleRecord run_single(const RunConfig& cfg);

struct SweepRow {
    double axis_value;
    PointResult point;
};

struct SweepTable {
    std::string axis_col;
    std::string value_col;
    std::vector<SweepRow> rows;
};

/// Evaluates the sweep grid in axis order. Per-point failures land in the
/// row's error field instead of aborting.
SweepTable run_sweep(const RunConfig& cfg);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes);

/// Hash of the normalized "key = value" lines, prefixed "fnv1a64:".
std::string config_hash(const std::vector<std::pair<std::string, std::string>>& raw);

/// "%.8e" (9 significant digits).
std::string format_scientific(double x);

/// CSV with '#' provenance header lines (tool version, config hash), then
/// a column header row, then one row per point.
void write_csv(std::ostream& out, const RunConfig& cfg, const SweepTable& table);

/// One JSON object {inputs, rows, meta}; inputs hold the raw config
/// strings verbatim, so parsing them back reproduces the run.
void write_json(std::ostream& out, const RunConfig& cfg, const SweepTable& table);

}  // namespace casimir
