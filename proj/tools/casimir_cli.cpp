// Command-line driver: single evaluations, parameter sweeps, config
// validation, and material presets.
//
// Exit codes: 0 success, 2 config error, 3 convergence/computation error,
// 4 I/O error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "casimir/config.hpp"
#include "casimir/errors.hpp"
#include "casimir/mirrors.hpp"
#include "casimir/sweep.hpp"
#include "casimir/version.hpp"

namespace {

casimir::RunConfig load(const std::string& path) {
    return casimir::build_run_config(casimir::read_config_file(path));
}

int do_single(const std::string& path) {
    const casimir::RunConfig cfg = load(path);
    if (cfg.sweep)
        throw casimir::ConfigError(
            "sweep.* keys are not used by 'single'; use 'casimir sweep'");
    const casimir::SingleRecord rec = casimir::run_single(cfg);
    for (const auto& [k, v] : rec.fields) std::cout << k << " = " << v << "\n";
    return 0;
}

int do_sweep(const std::string& path, const std::string& out_path, const std::string& format) {
    const casimir::RunConfig cfg = load(path);
    const casimir::SweepTable table = casimir::run_sweep(cfg);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw casimir::IoError("cannot open output file: " + out_path);
    if (format == "json")
        casimir::write_json(out, cfg, table);
    else
        casimir::write_csv(out, cfg, table);
    out.flush();
    if (!out) throw casimir::IoError("write failure on output file: " + out_path);
    std::cerr << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
    return 0;
}

int do_validate(const std::string& path) {
    const casimir::RunConfig cfg = load(path);
    std::cout << "ok " << casimir::config_hash(cfg.raw) << "\n";
    return 0;
}

int do_presets_list() {
    const auto gold = casimir::gold_plasma();
    const auto copper = casimir::copper_plasma();
    std::cout << "gold   lambda_p_m=" << casimir::format_scientific(
                     casimir::plasma_wavelength(gold.omega_p))
              << " omega_p_rad_per_s=" << casimir::format_scientific(gold.omega_p) << "\n";
    std::cout << "copper lambda_p_m=" << casimir::format_scientific(
                     casimir::plasma_wavelength(copper.omega_p))
              << " omega_p_rad_per_s=" << casimir::format_scientific(copper.omega_p) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir force calculator"};
    app.set_version_flag("--version", std::string("casimir ") + casimir::version);
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv";

    auto* single = app.add_subcommand("single", "Evaluate one configuration");
    single->add_option("config", config_path, "config file")->required();

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    sweep->add_option("config", config_path, "config file")->required();
    sweep->add_option("--out", out_path, "output file path")->required();
    sweep->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* presets = app.add_subcommand("presets", "Built-in material presets");
    presets->require_subcommand(1);
    auto* presets_list = presets->add_subcommand("list", "List presets");

    auto* validate = app.add_subcommand("validate", "Check a configuration file");
    validate->add_option("config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (single->parsed()) return do_single(config_path);
        if (sweep->parsed()) return do_sweep(config_path, out_path, format);
        if (presets_list->parsed()) return do_presets_list();
        if (validate->parsed()) return do_validate(config_path);
    } catch (const casimir::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const casimir::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const casimir::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const casimir::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
