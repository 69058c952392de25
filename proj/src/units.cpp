#include "analog/units.hpp"

#include <string>

#include "analog/errors.hpp"

namespace analog {

namespace {

// Size of one unit expressed in the SI unit of its dimension.
double scale(Unit unit) noexcept {
  switch (unit) {
    case Unit::Hz: return 1.0;
    case Unit::kHz: return 1e3;
    case Unit::MHz: return 1e6;
    case Unit::GHz: return 1e9;
    case Unit::m: return 1.0;
    case Unit::mm: return 1e-3;
    case Unit::um: return 1e-6;
    case Unit::nm: return 1e-9;
    case Unit::J: return 1.0;
    case Unit::eV: return kConstants.eV;
    case Unit::meV: return 1e-3 * kConstants.eV;
    case Unit::ueV: return 1e-6 * kConstants.eV;
    case Unit::ohm: return 1.0;
    case Unit::z0: return kConstants.Z0;
    case Unit::kg: return 1.0;
  }
  return 1.0;
}

}  // namespace

Dimension dimension_of(Unit unit) noexcept {
  switch (unit) {
    case Unit::Hz:
    case Unit::kHz:
    case Unit::MHz:
    case Unit::GHz: return Dimension::frequency;
    case Unit::m:
    case Unit::mm:
    case Unit::um:
    case Unit::nm: return Dimension::length;
    case Unit::J:
    case Unit::eV:
    case Unit::meV:
    case Unit::ueV: return Dimension::energy;
    case Unit::ohm:
    case Unit::z0: return Dimension::impedance;
    case Unit::kg: return Dimension::mass;
  }
  return Dimension::mass;
}

double convert(double value, Unit from, Unit to) {
  if (dimension_of(from) != dimension_of(to)) {
    throw Error(ErrorKind::IncompatibleUnits, "cannot convert " + std::string(to_string(from)) +
                                                  " to " + std::string(to_string(to)));
  }
  if (from == to) return value;
  const double a = scale(from);
  const double b = scale(to);
  // Power-of-ten factors are applied as a single multiply or divide so that
  // e.g. 5 mm -> m and 9 GHz -> Hz are exact.
  if (b == 1.0) return value * a;
  if (a == 1.0) return value / b;
  return value * a / b;
}

Unit parse_unit(std::string_view text) {
  static constexpr Unit all[] = {Unit::Hz, Unit::kHz, Unit::MHz, Unit::GHz, Unit::m,
                                 Unit::mm, Unit::um,  Unit::nm,  Unit::J,   Unit::eV,
                                 Unit::meV, Unit::ueV, Unit::ohm, Unit::z0, Unit::kg};
  for (Unit u : all) {
    if (to_string(u) == text) return u;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown unit '" + std::string(text) + "'");
}

std::string_view to_string(Unit unit) noexcept {
  switch (unit) {
    case Unit::Hz: return "Hz";
    case Unit::kHz: return "kHz";
    case Unit::MHz: return "MHz";
    case Unit::GHz: return "GHz";
    case Unit::m: return "m";
    case Unit::mm: return "mm";
    case Unit::um: return "um";
    case Unit::nm: return "nm";
    case Unit::J: return "J";
    case Unit::eV: return "eV";
    case Unit::meV: return "meV";
    case Unit::ueV: return "ueV";
    case Unit::ohm: return "ohm";
    case Unit::z0: return "z0";
    case Unit::kg: return "kg";
  }
  return "?";
}

}  // namespace analog
