#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "casimir/mirrors.hpp"

#include "oracles.hpp"

using namespace casimir;

namespace {

FieldModeIm mode(double xi, double k, Polarization p) { return FieldModeIm{xi, k, p}; }

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const auto dir = std::filesystem::temp_directory_path() / "casimir_mirror_tests";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    std::ofstream out(p);
    out << body;
    return p;
}

}  // namespace

TEST_CASE("perfect mirror reflects fully in both polarizations") {
    const MirrorModel m = PerfectMirror{};
    for (double xi : {0.0, 1e12, 1e15, 1e17}) {
        for (double k : {0.0, 1e5, 1e7}) {
            CHECK(reflection_amplitude(m, mode(xi, k, Polarization::TE)) == -1.0);
            CHECK(reflection_amplitude(m, mode(xi, k, Polarization::TM)) == 1.0);
        }
    }
}

TEST_CASE("scalar mirror returns its amplitude everywhere") {
    const MirrorModel m = ScalarMirror(0.37);
    CHECK(reflection_amplitude(m, mode(1e15, 2e6, Polarization::TE)) == 0.37);
    CHECK(reflection_amplitude(m, mode(0.0, 0.0, Polarization::TM)) == 0.37);

    CHECK_NOTHROW(ScalarMirror(1.0));
    CHECK_NOTHROW(ScalarMirror(-1.0));
    CHECK_THROWS_AS(ScalarMirror(1.0001), std::invalid_argument);
    CHECK_THROWS_AS(ScalarMirror(-2.0), std::invalid_argument);
}

TEST_CASE("plasma mirror matches the Fresnel amplitudes") {
    const MirrorModel m = PlasmaMirror(1e16);
    CHECK(permittivity_im(m, 1e15) == doctest::Approx(101.0).epsilon(1e-14));

    const double rte = reflection_amplitude(m, mode(1e15, 3e6, Polarization::TE));
    const double rtm = reflection_amplitude(m, mode(1e15, 3e6, Polarization::TM));
    CHECK(rte == doctest::Approx(-0.764766457326491).epsilon(1e-12));
    CHECK(rtm == doctest::Approx(0.861713594628591).epsilon(1e-12));

    // a very dense plasma approaches the perfect mirror: 1 - |r| ~ 2 kappa c / omega_p
    const MirrorModel dense = PlasmaMirror(1e19);
    CHECK(reflection_amplitude(dense, mode(1e15, 3e6, Polarization::TE)) ==
          doctest::Approx(-1.0).epsilon(1e-3));
    CHECK(reflection_amplitude(dense, mode(1e15, 3e6, Polarization::TM)) ==
          doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("plasma mirror keeps a finite TE amplitude at zero frequency") {
    const MirrorModel m = PlasmaMirror(1e16);
    CHECK(reflection_amplitude(m, mode(0.0, 3e6, Polarization::TM)) == 1.0);
    CHECK(reflection_amplitude(m, mode(0.0, 3e6, Polarization::TE)) ==
          doctest::Approx(-0.835576095557834).epsilon(1e-12));
    // k -> 0 closes the TE channel completely
    CHECK(reflection_amplitude(m, mode(0.0, 0.0, Polarization::TE)) == -1.0);
    CHECK(permittivity_im(m, 0.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("drude mirror amplitudes and static limits") {
    const MirrorModel m = DrudeMirror(1e16, 1e14);
    CHECK(permittivity_im(m, 1e15) == doctest::Approx(91.9090909090909).epsilon(1e-13));
    CHECK(reflection_amplitude(m, mode(1e15, 3e6, Polarization::TE)) ==
          doctest::Approx(-0.754884181888064).epsilon(1e-12));
    CHECK(reflection_amplitude(m, mode(1e15, 3e6, Polarization::TM)) ==
          doctest::Approx(0.855465497047581).epsilon(1e-12));

    // dissipation kills the zero-frequency TE reflection, TM is unaffected
    CHECK(reflection_amplitude(m, mode(0.0, 3e6, Polarization::TE)) == 0.0);
    CHECK(reflection_amplitude(m, mode(0.0, 3e6, Polarization::TM)) == 1.0);

    // gamma = 0 falls back to the plasma model (same static branch, and the
    // permittivities agree to rounding elsewhere)
    const MirrorModel lossless = DrudeMirror(1e16, 0.0);
    const MirrorModel plasma = PlasmaMirror(1e16);
    for (auto p : {Polarization::TE, Polarization::TM}) {
        CHECK(reflection_amplitude(lossless, mode(0.0, 3e6, p)) ==
              reflection_amplitude(plasma, mode(0.0, 3e6, p)));
        for (double xi : {1e14, 1e15, 1e16}) {
            CHECK(reflection_amplitude(lossless, mode(xi, 3e6, p)) ==
                  doctest::Approx(reflection_amplitude(plasma, mode(xi, 3e6, p)))
                      .epsilon(1e-14));
        }
    }

    CHECK_THROWS_AS(DrudeMirror(0.0, 1e13), std::invalid_argument);
    CHECK_THROWS_AS(DrudeMirror(1e16, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(PlasmaMirror(-1e16), std::invalid_argument);
}

TEST_CASE("tabulated mirror interpolates permittivity log-log") {
    const MirrorModel m = TabulatedMirror({1e14, 1e16}, {100.0, 2.0});

    // midpoint in log xi -> geometric mean of the endpoints
    CHECK(permittivity_im(m, 1e15) == doctest::Approx(std::sqrt(200.0)).epsilon(1e-13));
    CHECK(permittivity_im(m, 1e14) == doctest::Approx(100.0).epsilon(1e-13));
    CHECK(permittivity_im(m, 1e16) == doctest::Approx(2.0).epsilon(1e-13));

    CHECK(reflection_amplitude(m, mode(1e15, 3e6, Polarization::TE)) ==
          doctest::Approx(-0.48386449216159).epsilon(1e-12));
    CHECK(reflection_amplitude(m, mode(1e15, 3e6, Polarization::TM)) ==
          doctest::Approx(0.662110044803609).epsilon(1e-12));

    CHECK_THROWS_AS(permittivity_im(m, 1e13), std::domain_error);
    CHECK_THROWS_AS(permittivity_im(m, 1e17), std::domain_error);
    CHECK_THROWS_AS(reflection_amplitude(m, mode(1e13, 3e6, Polarization::TE)),
                    std::domain_error);

    const MirrorModel clamped = TabulatedMirror({1e14, 1e16}, {100.0, 2.0}, true);
    CHECK(permittivity_im(clamped, 1e13) == 100.0);
    CHECK(permittivity_im(clamped, 1e17) == 2.0);
}

TEST_CASE("tabulated mirror static limit uses the low-frequency permittivity") {
    const MirrorModel m = TabulatedMirror({1e14, 1e16}, {100.0, 2.0});
    // finite eps: TE channel closes, TM keeps the electrostatic image factor
    CHECK(reflection_amplitude(m, mode(0.0, 3e6, Polarization::TE)) == 0.0);
    CHECK(reflection_amplitude(m, mode(0.0, 3e6, Polarization::TM)) ==
          doctest::Approx(99.0 / 101.0).epsilon(1e-14));
    CHECK(reflection_amplitude(m, mode(0.0, 0.0, Polarization::TM)) == 1.0);
}

TEST_CASE("tabulated mirror constructor validation") {
    CHECK_THROWS_AS(TabulatedMirror({1e14}, {100.0}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedMirror({1e14, 1e16}, {100.0}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedMirror({1e16, 1e14}, {2.0, 100.0}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedMirror({1e14, 1e14}, {2.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedMirror({0.0, 1e14}, {2.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(TabulatedMirror({1e14, 1e16}, {0.5, 2.0}), std::invalid_argument);
}

TEST_CASE("permittivity is only defined for dielectric models") {
    CHECK_THROWS_AS(permittivity_im(PerfectMirror{}, 1e15), std::invalid_argument);
    CHECK_THROWS_AS(permittivity_im(ScalarMirror(0.5), 1e15), std::invalid_argument);
    CHECK_THROWS_AS(permittivity_im(PlasmaMirror(1e16), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(reflection_amplitude(PerfectMirror{}, mode(-1.0, 0.0, Polarization::TE)),
                    std::invalid_argument);
    CHECK_THROWS_AS(reflection_amplitude(PerfectMirror{}, mode(1e15, -1.0, Polarization::TE)),
                    std::invalid_argument);
}

TEST_CASE("all models stay passive on a frequency-wavevector grid") {
    const std::vector<MirrorModel> models = {
        PerfectMirror{},
        ScalarMirror(0.8),
        ScalarMirror(-0.6),
        PlasmaMirror(1.4e16),
        DrudeMirror(1.4e16, 5e13),
        TabulatedMirror({1e12, 1e14, 1e16, 1e18}, {400.0, 50.0, 3.0, 1.0}),
    };
    for (const auto& m : models) {
        for (double xi : {0.0, 1e12, 1e13, 1e14, 1e15, 1e16, 1e17, 1e18}) {
            for (double k : {0.0, 1e4, 1e6, 1e8}) {
                for (auto p : {Polarization::TE, Polarization::TM}) {
                    const double r = reflection_amplitude(m, mode(xi, k, p));
                    CHECK(std::abs(r) <= 1.0 + 1e-15);
                }
            }
        }
    }
}

TEST_CASE("permittivity table loads from csv") {
    const auto path = write_temp("good.csv",
                                 "# gold-ish table\n"
                                 "xi_rad_per_s,epsilon\n"
                                 "\n"
                                 "1.0e14, 100.0\n"
                                 "1.0e16, 2.0\n");
    const MirrorModel m = load_tabulated_permittivity(path);
    CHECK(model_name(m) == "tabulated");
    CHECK(permittivity_im(m, 1e15) == doctest::Approx(std::sqrt(200.0)).epsilon(1e-13));
    CHECK_THROWS_AS(permittivity_im(m, 1e13), std::domain_error);

    const MirrorModel mc = load_tabulated_permittivity(path, true);
    CHECK(permittivity_im(mc, 1e13) == 100.0);
}

TEST_CASE("permittivity table rejects malformed input") {
    CHECK_THROWS_AS(load_tabulated_permittivity("/nonexistent/eps.csv"), IoError);

    const auto bad_header = write_temp("bad_header.csv", "xi,eps\n1e14,100\n1e16,2\n");
    CHECK_THROWS_AS(load_tabulated_permittivity(bad_header), IoError);

    const auto bad_row = write_temp("bad_row.csv",
                                    "xi_rad_per_s,epsilon\n1e14,100\n1e15,banana\n");
    try {
        load_tabulated_permittivity(bad_row);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find(":3") != std::string::npos);
    }

    const auto non_mono = write_temp("non_mono.csv",
                                     "xi_rad_per_s,epsilon\n1e16,2\n1e14,100\n");
    CHECK_THROWS_AS(load_tabulated_permittivity(non_mono), IoError);

    const auto small_eps = write_temp("small_eps.csv",
                                      "xi_rad_per_s,epsilon\n1e14,0.9\n1e16,2\n");
    CHECK_THROWS_AS(load_tabulated_permittivity(small_eps), IoError);

    const auto one_row = write_temp("one_row.csv", "xi_rad_per_s,epsilon\n1e14,100\n");
    CHECK_THROWS_AS(load_tabulated_permittivity(one_row), IoError);
}

TEST_CASE("metal presets and plasma wavelength conversions") {
    CHECK(gold_plasma().omega_p == doctest::Approx(1.38503791713886e16).epsilon(1e-12));
    CHECK(copper_plasma().omega_p == doctest::Approx(1.37492815132033e16).epsilon(1e-12));
    CHECK(plasma_wavelength(gold_plasma().omega_p) == doctest::Approx(136e-9).epsilon(1e-14));
    CHECK(plasma_frequency_from_wavelength(plasma_wavelength(5e15)) ==
          doctest::Approx(5e15).epsilon(1e-14));
    CHECK_THROWS_AS(plasma_wavelength(0.0), std::invalid_argument);
    CHECK_THROWS_AS(plasma_frequency_from_wavelength(-1.0), std::invalid_argument);
}

TEST_CASE("field mode kappa") {
    const FieldModeIm m{1e15, 3e6, Polarization::TE};
    CHECK(m.kappa() == doctest::Approx(std::hypot(3e6, 1e15 / si.c)).epsilon(1e-15));
    CHECK(FieldModeIm{0.0, 2e6, Polarization::TM}.kappa() == 2e6);
}

TEST_CASE("model names") {
    CHECK(model_name(PerfectMirror{}) == "perfect");
    CHECK(model_name(ScalarMirror(0.1)) == "scalar");
    CHECK(model_name(PlasmaMirror(1e16)) == "plasma");
    CHECK(model_name(DrudeMirror(1e16, 1e13)) == "drude");
}
