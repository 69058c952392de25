#pragma once

#include "analog/types.hpp"

// Effective-medium description of a 2D array of thin perfectly conducting
// wires (E parallel to the wires, propagation across the rows), following
// Brown's closed forms for the index and impedance.
namespace analog::wire {

struct WireArraySpec {
  double wire_radius = 0.0;         // r, m
  double transverse_pitch = 0.0;    // a, m
  double longitudinal_pitch = 0.0;  // b, m
  int rows = 1;                     // N

  /// GeometryViolation unless 0 < 2 pi r < a, b > 0 and N >= 1.
  void validate() const;
  double thickness() const { return rows * longitudinal_pitch; }
};

struct MediumResponse {
  double frequency = 0.0;
  Complex index;
  Complex impedance;     // normalized to Z0
  Complex permittivity;  // n / Z
  Complex permeability;  // n Z
};

struct EffectiveBarrier {
  double photon_energy = 0.0;   // Ep = h f, J
  double barrier_height = 0.0;  // Vb from Re(n^2), J
  double loss_component = 0.0;  // the Im(n^2) part dropped from Vb, J
  double effective_mass = 0.0;  // h f / c0^2, kg
  double thickness = 0.0;       // N b, m
};

/// n = (lambda0 / 2 pi b) arccos[cos(2 pi b/lambda0)
///       + (lambda0 / 2a) sin(2 pi b/lambda0) / ln(a / 2 pi r)].
/// The arccos branch is chosen so that Im(n) >= 0, and n >= 0 when real.
Complex brown_index(const WireArraySpec& spec, double frequency);
Complex brown_index_at_wavelength(const WireArraySpec& spec, double wavelength);

/// Z = tan(pi b / lambda0) / tan(pi b n / lambda0). TangentPole when either
/// tangent is singular (except n = 1, where the ratio is identically 1).
Complex brown_impedance(const WireArraySpec& spec, double frequency, Complex index);
Complex brown_impedance_at_wavelength(const WireArraySpec& spec, double wavelength, Complex index);

Complex permittivity(Complex index, Complex impedance);
Complex permeability(Complex index, Complex impedance);

MediumResponse brown_response(const WireArraySpec& spec, double frequency);

EffectiveBarrier effective_barrier(const WireArraySpec& spec, double frequency);

struct LatticeSolution {
  double transverse_pitch = 0.0;  // a, m
  double residual = 0.0;          // Vb(a) b - target, J m
  bool multiple_roots = false;    // the sign scan saw more than one crossing
  int iterations = 0;
};

/// Finds a with Vb(a, b, r, f) * b = target (one row, N = 1), searching
/// a in (2 pi r (1 + 1e-6), 0.1 m]. NoRootInBracket if no sign change.
LatticeSolution solve_lattice_a(double b, double target, double frequency, double wire_radius);

}  // namespace analog::wire
