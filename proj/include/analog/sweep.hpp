#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "analog/table.hpp"
#include "analog/units.hpp"
#include "analog/wire_medium.hpp"

// Parameter sweeps producing SweepTable series. All quantities are SI; column
// names carry the unit suffix. Rows are computed independently (possibly in
// parallel) and stored in axis order.
namespace analog::sweep {

/// n points from a to b inclusive (n = 1 gives {a}).
std::vector<double> linspace(double a, double b, std::size_t n);
/// n log-spaced points from a to b inclusive; a, b > 0.
std::vector<double> geomspace(double a, double b, std::size_t n);

/// InvalidArgument unless non-empty and strictly monotone.
void validate_axis(std::span<const double> axis, std::string_view name);

/// Columns f_hz, eps_re, eps_im, n_re, n_im, ep_j, vb_j, s11_sq, s21_sq.
/// S-parameters are those of a slab of thickness N b with Brown's (n, Z).
SweepTable sweep_frequency(const wire::WireArraySpec& spec, std::span<const double> frequencies);

/// Columns r_m, d_m, eps_re, eps_im, vb_over_ep, T, R at a fixed frequency.
SweepTable sweep_wire_radius(const wire::WireArraySpec& base, std::span<const double> radii,
                             double frequency = 9e9);

struct Band {
  double f_min = 1e9;
  double f_max = 10e9;
};

/// Frequency in the band where Ep = ratio * Vb. NoCrossingInBand otherwise.
double solve_ratio_frequency(const wire::WireArraySpec& spec, double ratio, Band band = {});

/// EM barrier width sweep over integer row counts N (L = N b) at the frequency
/// where Ep = ratio * Vb. Columns rows, L_m, L_over_lambda0, nk0L_re, nk0L_im, T, R.
SweepTable sweep_width(const wire::WireArraySpec& base, double ratio, std::span<const double> rows,
                       Band band = {});

/// QM barrier width sweep at E = ratio * Vb with continuous L.
/// Columns L_m, L_over_lambda, qL_re, qL_im, T, R (lambda = 2 pi / k).
SweepTable sweep_width_qm(double energy, double ratio, std::span<const double> widths,
                          double mass = constants().m_e);

/// Columns vb_j, vb_over_e, T, R for a QM barrier of fixed width.
SweepTable sweep_barrier_height(double energy, double width, std::span<const double> heights,
                                double mass = constants().m_e);

struct TableOneSpec {
  double frequency = 3e9;
  double wire_radius = 0.04e-3;
  double anchor_a = 10e-3;  // (a, b) pair that fixes the constant Vb * b
  double anchor_b = 10e-3;
  int rows = 5;             // N used for the slab T and R columns
  std::vector<double> b_axis{10e-3, 9e-3, 8e-3, 7e-3, 6e-3, 5e-3, 4e-3, 3e-3, 2e-3, 1e-3};
};

/// Constant-(Vb b) lattice schedule. Columns b_m, a_m, vb_j, vb_b_jm, L_m, T, R.
SweepTable table1(const TableOneSpec& spec = {});

struct DeltaSweep {
  SweepTable qm;  // vb_j, L_m, T, R, T_delta, R_delta
  SweepTable em;  // table1 schedule
};

/// Constant-area QM schedule towards the delta barrier, plus the EM lattice
/// schedule of the wire-array analogue.
DeltaSweep sweep_delta(double energy, double area, std::span<const double> heights,
                       const TableOneSpec& em = {}, double mass = constants().m_e);

enum class SweepKind { frequency, wire_radius, barrier_height, width_below, width_above, delta_limit };

enum class Domain { em, qm };

/// Everything a config-driven sweep may need; each kind reads its own fields.
struct SweepSpec {
  SweepKind kind = SweepKind::frequency;
  Domain domain = Domain::em;  // width sweeps only
  wire::WireArraySpec wire{0.04e-3, 10e-3, 5e-3, 5};
  double frequency = 9e9;           // wire_radius
  double energy = 0.0;              // barrier_height, width (qm), delta_limit
  double width = 0.0;               // barrier_height
  double area = 0.0;                // delta_limit
  double mass = constants().m_e;
  double ratio = 0.0;               // width sweeps; 0 picks 0.95 / 1.05 by kind
  Band band;
  std::vector<double> axis;
};

SweepTable run_sweep(const SweepSpec& spec);

std::string_view to_string(SweepKind kind) noexcept;
SweepKind parse_sweep_kind(std::string_view text);

}  // namespace analog::sweep
