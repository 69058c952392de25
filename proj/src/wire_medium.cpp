#include "analog/wire_medium.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "analog/errors.hpp"
#include "analog/units.hpp"
#include "trig.hpp"

namespace analog::wire {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTolerance = 1e-12;
constexpr double kBracketUpper = 0.1;
constexpr int kSignScanPoints = 256;

double wavelength_of(double frequency) {
  if (!(frequency > 0.0) || !std::isfinite(frequency)) {
    throw Error(ErrorKind::InvalidArgument, "frequency must be positive");
  }
  return constants().c0 / frequency;
}

}  // namespace

void WireArraySpec::validate() const {
  if (!(wire_radius > 0.0)) throw Error(ErrorKind::GeometryViolation, "wire radius must be positive");
  if (!(2.0 * kPi * wire_radius < transverse_pitch)) {
    throw Error(ErrorKind::GeometryViolation, "transverse pitch a must exceed 2 pi r");
  }
  if (!(longitudinal_pitch > 0.0)) {
    throw Error(ErrorKind::GeometryViolation, "longitudinal pitch b must be positive");
  }
  if (rows < 1) throw Error(ErrorKind::GeometryViolation, "row count must be at least 1");
}

Complex brown_index_at_wavelength(const WireArraySpec& spec, double wavelength) {
  spec.validate();
  if (!(wavelength > 0.0)) throw Error(ErrorKind::InvalidArgument, "wavelength must be positive");
  const double a = spec.transverse_pitch;
  const double cells = spec.longitudinal_pitch / wavelength;  // b / lambda0
  const double arg = detail::cospi(2.0 * cells) +
                     (wavelength / (2.0 * a)) * detail::sinpi(2.0 * cells) /
                         std::log(a / (2.0 * kPi * spec.wire_radius));

  // Principal arccos, then the sign flip (and 2 pi shift) that puts the
  // result in Im >= 0, Re >= 0. For real arguments the three cases are:
  //   |arg| <= 1 : real, in [0, pi]          (pass band)
  //    arg  > 1  : i acosh(arg)              (evanescent, eps < 0)
  //    arg  < -1 : pi + i acosh(-arg)        (Bragg stop band)
  Complex w;
  if (std::abs(arg) <= 1.0) {
    w = std::acos(arg);
  } else if (arg > 1.0) {
    w = Complex(0.0, std::acosh(arg));
  } else {
    w = Complex(kPi, std::acosh(-arg));
  }
  return w / (2.0 * kPi * cells);
}

Complex brown_index(const WireArraySpec& spec, double frequency) {
  return brown_index_at_wavelength(spec, wavelength_of(frequency));
}

Complex brown_impedance_at_wavelength(const WireArraySpec& spec, double wavelength, Complex index) {
  spec.validate();
  if (!(wavelength > 0.0)) throw Error(ErrorKind::InvalidArgument, "wavelength must be positive");
  if (index == Complex(1.0)) return 1.0;

  const double cells = spec.longitudinal_pitch / wavelength;
  const double cos_u = detail::cospi(cells);
  if (std::abs(cos_u) < kPoleTolerance) {
    throw Error(ErrorKind::TangentPole, "tan(pi b / lambda0) is singular");
  }
  const Complex v = kPi * cells * index;
  const double m = std::round(v.real() / kPi - 0.5);
  if (std::abs(v - Complex((m + 0.5) * kPi, 0.0)) < kPoleTolerance) {
    throw Error(ErrorKind::TangentPole, "tan(pi b n / lambda0) is singular");
  }
  return (detail::sinpi(cells) / cos_u) / std::tan(v);
}

Complex brown_impedance(const WireArraySpec& spec, double frequency, Complex index) {
  return brown_impedance_at_wavelength(spec, wavelength_of(frequency), index);
}

Complex permittivity(Complex index, Complex impedance) {
  if (!(std::abs(impedance) >= 1e-300)) throw Error(ErrorKind::ZeroImpedance, "impedance is zero");
  return index / impedance;
}

Complex permeability(Complex index, Complex impedance) { return index * impedance; }

MediumResponse brown_response(const WireArraySpec& spec, double frequency) {
  MediumResponse out;
  out.frequency = frequency;
  out.index = brown_index(spec, frequency);
  out.impedance = brown_impedance(spec, frequency, out.index);
  out.permittivity = permittivity(out.index, out.impedance);
  out.permeability = permeability(out.index, out.impedance);
  return out;
}

EffectiveBarrier effective_barrier(const WireArraySpec& spec, double frequency) {
  const auto& pc = constants();
  const Complex n = brown_index(spec, frequency);
  const Complex n2 = n * n;
  const double hf = pc.h * frequency;

  EffectiveBarrier out;
  out.photon_energy = hf;
  out.effective_mass = hf / (pc.c0 * pc.c0);
  const double kinetic = hf * hf / (2.0 * out.effective_mass * pc.c0 * pc.c0);
  out.barrier_height = out.photon_energy - kinetic * n2.real();
  out.loss_component = -kinetic * n2.imag();
  out.thickness = spec.thickness();
  return out;
}

LatticeSolution solve_lattice_a(double b, double target, double frequency, double wire_radius) {
  if (!(b > 0.0) || !(frequency > 0.0) || !(wire_radius > 0.0) || !std::isfinite(target)) {
    throw Error(ErrorKind::InvalidArgument, "solve_lattice_a needs positive b, f, r and a finite target");
  }
  const double lo = 2.0 * kPi * wire_radius * (1.0 + 1e-6);
  const double hi = kBracketUpper;
  if (!(lo < hi)) throw Error(ErrorKind::GeometryViolation, "wire radius leaves no room below a = 0.1 m");

  auto residual = [&](double a) {
    return effective_barrier({wire_radius, a, b, 1}, frequency).barrier_height * b - target;
  };

  // Geometric sign scan: finds the first bracketing cell and detects extra roots.
  std::vector<double> grid(kSignScanPoints);
  std::vector<double> values(kSignScanPoints);
  const double ratio = std::pow(hi / lo, 1.0 / (kSignScanPoints - 1));
  for (int i = 0; i < kSignScanPoints; ++i) {
    grid[i] = i + 1 == kSignScanPoints ? hi : lo * std::pow(ratio, i);
    values[i] = residual(grid[i]);
  }
  int crossings = 0;
  int first = -1;
  for (int i = 0; i + 1 < kSignScanPoints; ++i) {
    if (values[i] == 0.0) return {grid[i], 0.0, false, 0};
    if (std::signbit(values[i]) != std::signbit(values[i + 1])) {
      if (first < 0) first = i;
      ++crossings;
    }
  }
  if (first < 0) {
    throw Error(ErrorKind::NoRootInBracket,
                "Vb*b - target keeps one sign for a in (2 pi r, 0.1 m] at b = " + std::to_string(b));
  }

  std::uintmax_t max_iter = 200;
  const auto [x0, x1] = boost::math::tools::toms748_solve(
      residual, grid[first], grid[first + 1], values[first], values[first + 1],
      boost::math::tools::eps_tolerance<double>(), max_iter);
  const double a = 0.5 * (x0 + x1);
  return {a, residual(a), crossings > 1, static_cast<int>(max_iter)};
}

}  // namespace analog::wire
