#pragma once

#include <numbers>
#include <string_view>

namespace analog {

/// CODATA 2018 values in SI. Everything inside the library works in SI;
/// conversion to GHz/mm/eV happens only at the CLI and file boundary.
struct PhysicalConstants {
  double h;     // J s
  double hbar;  // J s
  double c0;    // m/s
  double m_e;   // kg
  double Z0;    // ohm
  double eV;    // J
};

inline constexpr PhysicalConstants kConstants{
    6.62607015e-34,
    6.62607015e-34 / (2.0 * std::numbers::pi),
    299792458.0,
    9.1093837015e-31,
    376.730313668,
    1.602176634e-19,
};

constexpr const PhysicalConstants& constants() noexcept { return kConstants; }

enum class Dimension { frequency, length, energy, impedance, mass };

enum class Unit {
  Hz, kHz, MHz, GHz,
  m, mm, um, nm,
  J, eV, meV, ueV,
  ohm, z0,  // z0: normalized to the impedance of free space
  kg,
};

Dimension dimension_of(Unit unit) noexcept;

/// Linear conversion between units of the same dimension.
/// Throws Error(IncompatibleUnits) otherwise.
double convert(double value, Unit from, Unit to);

/// Parses "GHz", "mm", "eV", ... (case-sensitive, as written above).
Unit parse_unit(std::string_view text);
std::string_view to_string(Unit unit) noexcept;

}  // namespace analog
