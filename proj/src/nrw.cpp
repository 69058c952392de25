#include "analog/nrw.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "analog/errors.hpp"
#include "analog/units.hpp"

namespace analog::nrw {

namespace {

constexpr double kPi = std::numbers::pi;
// |Re Z| below this fraction of |Z| counts as a tie (purely reactive Z).
constexpr double kReactiveTie = 1e-8;

struct Candidate {
  Complex z;
  Complex phase;  // n k0 d on the principal branch
};

Candidate solve_for_sign(Complex z, Complex s11, Complex s21f, Complex w) {
  const Complex gamma = (z - 1.0) / (z + 1.0);
  const Complex p = s21f / (1.0 - s11 * gamma);  // e^{i n k0 d}
  // Pick +w or -w, whichever reproduces P.
  const double plus = std::abs(std::exp(kI * w) - p);
  const double minus = std::abs(std::exp(-kI * w) - p);
  return {z, plus <= minus ? w : -w};
}

ExtractedRow nan_row(double frequency) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const Complex cnan{nan, nan};
  return {frequency, true, cnan, cnan, cnan, cnan, 0};
}

}  // namespace

void SParamSeries::validate() const {
  if (rows.empty()) throw Error(ErrorKind::EmptySeries, "S-parameter series has no rows");
  if (!(thickness > 0.0)) throw Error(ErrorKind::InvalidArgument, "slab thickness must be positive");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i].frequency > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "frequency must be positive at row " + std::to_string(i));
    }
    if (i > 0 && !(rows[i].frequency > rows[i - 1].frequency)) {
      throw Error(ErrorKind::NonMonotoneFrequency,
                  "frequencies must increase strictly (row " + std::to_string(i) + ")");
    }
  }
}

ExtractedRow extract_principal(const SParamRow& row, double thickness, double min_s21,
                               S11Convention convention) {
  const double k0d = 2.0 * kPi * row.frequency / constants().c0 * thickness;
  const Complex s11 = convention == S11Convention::slab_model ? -row.s11 : row.s11;
  const Complex s21f = row.s21 * std::exp(kI * k0d);
  if (!(std::abs(s21f) >= min_s21)) {
    throw Error(ErrorKind::IndeterminateRow, "|s21| vanishes at f = " + std::to_string(row.frequency));
  }

  const Complex num = (1.0 + s11) * (1.0 + s11) - s21f * s21f;
  const Complex den = (1.0 - s11) * (1.0 - s11) - s21f * s21f;
  if (std::abs(den) == 0.0 || std::abs(num) == 0.0) {
    throw Error(ErrorKind::IndeterminateRow, "impedance ratio is singular at f = " + std::to_string(row.frequency));
  }
  Complex z = std::sqrt(num / den);
  const Complex w = std::acos((1.0 - s11 * s11 + s21f * s21f) / (2.0 * s21f));

  Candidate pos = solve_for_sign(z, s11, s21f, w);
  Candidate neg = solve_for_sign(-z, s11, s21f, w);
  Candidate pick;
  if (std::abs(z.real()) <= kReactiveTie * std::abs(z)) {
    pick = pos.phase.imag() >= neg.phase.imag() ? pos : neg;
  } else {
    pick = z.real() > 0.0 ? pos : neg;
  }

  ExtractedRow out;
  out.frequency = row.frequency;
  out.impedance = pick.z;
  out.index = pick.phase / k0d;
  out.permittivity = out.index / out.impedance;
  out.permeability = out.index * out.impedance;
  return out;
}

std::vector<int> branch_select(std::span<const double> principal_re, std::span<const double> k0d,
                               std::optional<int> initial_branch, double ambiguity_fraction) {
  if (principal_re.size() != k0d.size()) {
    throw Error(ErrorKind::InvalidArgument, "branch_select needs one k0 d per candidate");
  }
  std::vector<int> m(principal_re.size(), 0);
  if (m.empty()) return m;

  if (initial_branch) {
    m[0] = *initial_branch;
  } else if (std::abs(principal_re[0] * k0d[0]) > ambiguity_fraction * kPi) {
    throw Error(ErrorKind::BranchAmbiguity,
                "first row is not electrically thin (|n' k0 d| = " +
                    std::to_string(std::abs(principal_re[0] * k0d[0])) + "); supply an initial branch");
  }
  double previous = principal_re[0] + 2.0 * kPi * m[0] / k0d[0];
  for (std::size_t i = 1; i < m.size(); ++i) {
    m[i] = static_cast<int>(std::lround((previous - principal_re[i]) * k0d[i] / (2.0 * kPi)));
    previous = principal_re[i] + 2.0 * kPi * m[i] / k0d[i];
  }
  return m;
}

ExtractedParams extract(const SParamSeries& series, const NrwOptions& options) {
  series.validate();
  ExtractedParams out;
  out.thickness = series.thickness;
  out.rows.reserve(series.rows.size());

  std::vector<std::size_t> determinate;
  std::vector<double> principal_re;
  std::vector<double> k0d;
  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    const SParamRow& row = series.rows[i];
    try {
      out.rows.push_back(extract_principal(row, series.thickness, options.min_s21, options.convention));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IndeterminateRow) throw;
      out.rows.push_back(nan_row(row.frequency));
      continue;
    }
    determinate.push_back(i);
    principal_re.push_back(out.rows.back().index.real());
    k0d.push_back(2.0 * kPi * row.frequency / constants().c0 * series.thickness);
  }

  const std::vector<int> m =
      branch_select(principal_re, k0d, options.initial_branch, options.ambiguity_fraction);
  for (std::size_t j = 0; j < determinate.size(); ++j) {
    ExtractedRow& row = out.rows[determinate[j]];
    row.branch = m[j];
    row.index += 2.0 * kPi * m[j] / k0d[j];
    row.permittivity = row.index / row.impedance;
    row.permeability = row.index * row.impedance;
  }
  return out;
}

}  // namespace analog::nrw
