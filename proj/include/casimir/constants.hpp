#pragma once

/// Fundamental physical constants, CODATA SI values.
///
/// Single source of truth for the whole library: everything downstream is
/// expressed in SI (meters, seconds, kelvin, joules, newtons, pascals).

namespace casimir {

struct PhysicalConstants {
    double hbar;  ///< reduced Planck constant [J s]
    double c;     ///< speed of light in vacuum [m/s]
    double k_B;   ///< Boltzmann constant [J/K]
};

/// CODATA 2018 exact/defined values. Not user-mutable.
inline constexpr PhysicalConstants si{1.054571817e-34, 2.99792458e8, 1.380649e-23};

}  // namespace casimir
