#pragma once

#include <optional>
#include <span>
#include <vector>

#include "analog/types.hpp"

// Nicolson-Ross-Weir style inversion of two-port slab S-parameters into
// (Z, n, eps, mu), with a passive sign choice and arccos branch tracking.
//
// By default input S-parameters follow the em::solve_sparams convention:
//  - s21 carries the e^{-i k0 d} factor of a reference plane at z = d, so a
//    vacuum slab reads s21 = 1; extraction restores the face-referenced
//    s21 e^{i k0 d} first.
//  - s11 of a half-space is (1 - Z)/(1 + Z), the opposite sign of the usual
//    electric-field reflection (Z - 1)/(Z + 1) that the impedance formula
//    assumes; extraction negates it. Data already in the electric-field
//    convention sets S11Convention::electric_field.
namespace analog::nrw {

struct SParamRow {
  double frequency = 0.0;  // Hz
  Complex s11;
  Complex s21;
};

struct SParamSeries {
  std::vector<SParamRow> rows;
  double thickness = 0.0;  // d, m

  /// EmptySeries, InvalidArgument (d <= 0), NonMonotoneFrequency.
  void validate() const;
};

enum class S11Convention { slab_model, electric_field };

struct NrwOptions {
  // Branch integer of the first determinate row. Without it, that row must be
  // electrically thin: |n' k0 d| <= ambiguity_fraction * pi.
  std::optional<int> initial_branch;
  double ambiguity_fraction = 0.9;
  double min_s21 = 1e-12;
  S11Convention convention = S11Convention::slab_model;
};

struct ExtractedRow {
  double frequency = 0.0;
  bool indeterminate = false;  // values are NaN when set
  Complex impedance;
  Complex index;
  Complex permittivity;
  Complex permeability;
  int branch = 0;
};

struct ExtractedParams {
  std::vector<ExtractedRow> rows;
  double thickness = 0.0;
};

/// Principal-branch solution of one row: n' lies in [-pi, pi] / (k0 d).
/// IndeterminateRow when |s21| < min_s21 or the impedance ratio is singular.
ExtractedRow extract_principal(const SParamRow& row, double thickness, double min_s21 = 1e-12,
                               S11Convention convention = S11Convention::slab_model);

/// Branch integers m_i so that n'_i + 2 pi m_i / (k0 d)_i is continuous.
/// principal_re and k0d hold only determinate rows, in frequency order.
std::vector<int> branch_select(std::span<const double> principal_re, std::span<const double> k0d,
                               std::optional<int> initial_branch = std::nullopt,
                               double ambiguity_fraction = 0.9);

/// Full series extraction. Indeterminate rows are kept as gaps and skipped by
/// the branch tracker.
ExtractedParams extract(const SParamSeries& series, const NrwOptions& options = {});

}  // namespace analog::nrw
