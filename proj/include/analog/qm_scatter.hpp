#pragma once

#include <span>
#include <vector>

#include "analog/types.hpp"
#include "analog/units.hpp"

// Plane-wave scattering of a particle off piecewise-constant 1D potentials.
//
// Convention: psi(z) = A e^{ikz} + A' e^{-ikz} with time factor e^{-iEt/hbar}.
// A rectangular barrier occupies [z0, z0 + L]. Reflection is referenced to
// the left face and transmission to the global origin, so a barrier at
// z0 = 0 gives t = 2 e^{-ikL} / D.
namespace analog::qm {

struct QmBarrierSpec {
  double height = 0.0;                 // Vb, J (negative for a well)
  double width = 0.0;                  // L, m
  double mass = constants().m_e;       // kg
};

enum class Regime { above, below, degenerate };

struct BarrierWavenumber {
  Complex value;    // q, Im(q) >= 0; q = i*rho below the barrier
  Complex squared;  // q^2 = 2m(E - Vb)/hbar^2, exact even when q is degenerate
  Regime regime = Regime::above;
};

struct Wavenumbers {
  double k = 0.0;  // free-space wavenumber, 1/m
  BarrierWavenumber q;
};

/// Free-space wavenumber sqrt(2mE)/hbar.
double free_wavenumber(double energy, double mass);

Wavenumbers wavenumbers(double energy, const QmBarrierSpec& spec);

/// Maps (A1, A1') on the left of the barrier to (A3, A3') on the right.
/// z_start shifts the barrier along z; amplitudes stay in global coordinates
/// so matrices of adjacent segments can be cascaded directly.
TransferMatrix2 transfer_matrix_rect(const QmBarrierSpec& spec, double energy,
                                     double z_start = 0.0);

/// r and t for incidence from the left with nothing incoming from the right.
ScatterResult rt_from_matrix(const TransferMatrix2& m);

ScatterResult rt_rect(const QmBarrierSpec& spec, double energy);

/// Closed form in terms of wavenumbers only. q_squared carries the regime
/// (negative real part below the barrier); the result does not depend on the
/// sign of q. Used by the EM -> QM mapping where k, q, L come precomputed.
ScatterResult rt_closed_form(double k, Complex q_squared, double width);

struct DeltaBarrierSpec {
  double strength = 0.0;  // lambda = Vb * L, J m
  double gamma = 0.0;     // k / lambda, 1/(J m^2)
  double mass = constants().m_e;

  static DeltaBarrierSpec from_wavenumber(double strength, double k, double mass);
};

/// Delta barrier: with x = hbar^2 gamma / m, r = 1/(ix - 1), t = 1/(1 - 1/(ix)).
ScatterResult rt_delta(const DeltaBarrierSpec& spec, double k);

struct DeltaLimitRow {
  double height = 0.0;
  double width = 0.0;
  ScatterResult rect;
  ScatterResult delta;
};

/// Rectangular barriers of fixed area Vb*L at each requested height.
std::vector<DeltaLimitRow> delta_limit_schedule(double energy, double area,
                                                std::span<const double> heights,
                                                double mass = constants().m_e);

/// Product M_n ... M_2 M_1 of matrices given in propagation order.
TransferMatrix2 cascade(std::span<const TransferMatrix2> matrices);

struct PotentialSegment {
  double height = 0.0;  // J
  double width = 0.0;   // m
};

/// Scattering off consecutive constant segments starting at z = 0.
ScatterResult rt_piecewise(std::span<const PotentialSegment> segments, double energy,
                           double mass = constants().m_e);

}  // namespace analog::qm
