#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CmdResult {
    int code;
    std::string out;  // stdout and stderr combined
};

std::string cli_path() {
    const char* exe = std::getenv("CASIMIR_CLI");
    return exe ? exe : "";
}

CmdResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[512];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "casimir_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_config(const std::string& name, const std::string& body) {
    const auto p = temp_dir() / name;
    std::ofstream out(p);
    out << body;
    return p.string();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* force_conf =
    "quantity = force\n"
    "geometry.L_m = 1e-6\n"
    "geometry.A_m2 = 1e-4\n"
    "mirror1.model = perfect\n";

const char* sweep_conf =
    "quantity = eta\n"
    "geometry.A_m2 = 1e-4\n"
    "mirror1.model = gold\n"
    "sweep.axis = L\n"
    "sweep.start_m = 2e-7\n"
    "sweep.stop_m = 2e-6\n"
    "sweep.points = 3\n"
    "sweep.scale = log\n";

}  // namespace

TEST_CASE("cli binary is wired into the test environment") {
    REQUIRE_FALSE(cli_path().empty());
    REQUIRE(std::filesystem::exists(cli_path()));
}

TEST_CASE("version flag") {
    const auto r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(r.out.find("casimir") != std::string::npos);
}

TEST_CASE("presets list") {
    const auto r = run_cli("presets list");
    CHECK(r.code == 0);
    CHECK(r.out.find("gold") != std::string::npos);
    CHECK(r.out.find("copper") != std::string::npos);
    CHECK(r.out.find("1.38503792e+16") != std::string::npos);
    CHECK(r.out.find("1.36000000e-07") != std::string::npos);
}

TEST_CASE("single evaluation prints inputs, result, and flags") {
    const auto conf = write_config("single.conf", force_conf);
    const auto r = run_cli("single " + conf);
    CHECK(r.code == 0);
    CHECK(r.out.find("quantity = force") != std::string::npos);
    CHECK(r.out.find("result.force_N = 1.3001257") != std::string::npos);
    CHECK(r.out.find("result.err_est = ") != std::string::npos);
    CHECK(r.out.find("flags.area_regime_ok = true") != std::string::npos);
}

TEST_CASE("single refuses a sweep config") {
    const auto conf = write_config("single_sweep.conf", sweep_conf);
    const auto r = run_cli("single " + conf);
    CHECK(r.code == 2);
    CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("validate reports the config hash") {
    const auto good = write_config("ok.conf", force_conf);
    const auto r = run_cli("validate " + good);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("ok fnv1a64:", 0) == 0);

    const auto bad = write_config("bad.conf", "quantity = force\ngeometry.L_m = 1e-6\n"
                                              "geometry.A_m2 = 1e-4\nmirror1.model = perfect\n"
                                              "bogus.key = 1\n");
    CHECK(run_cli("validate " + bad).code == 2);
}

TEST_CASE("exit codes distinguish error classes") {
    CHECK(run_cli("single /nonexistent/run.conf").code == 4);

    const auto starved = write_config("starved.conf",
                                      std::string(force_conf) +
                                          "quadrature.rel_tol = 1e-12\n"
                                          "quadrature.max_subdivisions = 1\n");
    CHECK(run_cli("single " + starved).code == 3);

    const auto unwritable = write_config("sweepable.conf", sweep_conf);
    CHECK(run_cli("sweep " + unwritable + " --out /nonexistent/dir/out.csv").code == 4);

    CHECK(run_cli("frobnicate").code == 2);  // unknown verb
}

TEST_CASE("sweep writes deterministic csv") {
    const auto conf = write_config("sweep.conf", sweep_conf);
    const auto out1 = temp_dir() / "sweep1.csv";
    const auto out2 = temp_dir() / "sweep2.csv";

    const auto r1 = run_cli("sweep " + conf + " --out " + out1.string());
    CHECK(r1.code == 0);
    CHECK(r1.out.find("wrote") != std::string::npos);
    CHECK(r1.out.find("(3 rows)") != std::string::npos);

    const std::string text = slurp(out1);
    CHECK(text.rfind("# casimir ", 0) == 0);
    CHECK(text.find("# config_hash = fnv1a64:") != std::string::npos);
    CHECK(text.find("L_m,eta,err_est,error\n") != std::string::npos);
    CHECK(text.find("2.00000000e-07,") != std::string::npos);
    CHECK(text.find("2.00000000e-06,") != std::string::npos);

    const auto r2 = run_cli("sweep " + conf + " --out " + out2.string());
    CHECK(r2.code == 0);
    CHECK(slurp(out2) == text);
}

TEST_CASE("sweep writes json on request") {
    const auto conf = write_config("sweep_json.conf", sweep_conf);
    const auto out = temp_dir() / "sweep.json";
    const auto r = run_cli("sweep " + conf + " --out " + out.string() + " --format json");
    CHECK(r.code == 0);

    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["inputs"]["quantity"] == "eta");
    CHECK(doc["inputs"]["sweep.points"] == "3");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["L_m"] == 2e-7);
    CHECK(doc["rows"][0]["eta"].is_number());
    CHECK(doc["meta"]["tool"] == "casimir");

    CHECK(run_cli("sweep " + conf + " --out " + out.string() + " --format yaml").code == 2);
}
