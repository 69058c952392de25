#include "analog/qm_scatter.hpp"

#include <cmath>
#include <string>

#include "analog/errors.hpp"
#include "trig.hpp"

namespace analog::qm {

namespace {

constexpr double kDegenerateFraction = 1e-9;

void require_energy(double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorKind::NonPositiveEnergy, "energy must be positive, got " + std::to_string(energy));
  }
}

void validate(const QmBarrierSpec& spec) {
  if (!(spec.width >= 0.0) || !std::isfinite(spec.width)) {
    throw Error(ErrorKind::InvalidArgument, "barrier width must be finite and >= 0");
  }
  if (!(spec.mass > 0.0) || !std::isfinite(spec.mass)) {
    throw Error(ErrorKind::InvalidArgument, "particle mass must be positive");
  }
  if (!std::isfinite(spec.height)) {
    throw Error(ErrorKind::InvalidArgument, "barrier height must be finite");
  }
}

}  // namespace

double free_wavenumber(double energy, double mass) {
  require_energy(energy);
  return std::sqrt(2.0 * mass * energy) / constants().hbar;
}

Wavenumbers wavenumbers(double energy, const QmBarrierSpec& spec) {
  require_energy(energy);
  validate(spec);
  const double hbar = constants().hbar;
  const double k = std::sqrt(2.0 * spec.mass * energy) / hbar;

  const double excess = energy - spec.height;
  const double q2 = 2.0 * spec.mass * excess / (hbar * hbar);
  BarrierWavenumber q;
  q.squared = Complex(q2, 0.0);
  if (excess >= 0.0) {
    q.value = Complex(std::sqrt(2.0 * spec.mass * excess) / hbar, 0.0);
    q.regime = Regime::above;
  } else {
    q.value = Complex(0.0, std::sqrt(-2.0 * spec.mass * excess) / hbar);
    q.regime = Regime::below;
  }
  if (std::abs(excess) <= kDegenerateFraction * std::max(energy, std::abs(spec.height))) {
    q.regime = Regime::degenerate;
  }
  return {k, q};
}

TransferMatrix2 transfer_matrix_rect(const QmBarrierSpec& spec, double energy, double z_start) {
  const auto [k, q] = wavenumbers(energy, spec);
  const double L = spec.width;
  const auto cs = detail::cos_sinc(q.squared, L, false);

  const Complex sum = (q.squared + k * k) / (2.0 * k);
  const Complex diff = (q.squared - k * k) / (2.0 * k);
  const Complex behind = std::polar(1.0, -k * L);
  const Complex ahead = std::polar(1.0, k * L);

  TransferMatrix2 m;
  m.m11 = behind * (cs.cos + kI * sum * cs.sinc);
  m.m12 = behind * (kI * diff * cs.sinc);
  m.m21 = ahead * (-kI * diff * cs.sinc);
  m.m22 = ahead * (cs.cos - kI * sum * cs.sinc);

  if (z_start != 0.0) {
    m.m12 *= std::polar(1.0, -2.0 * k * z_start);
    m.m21 *= std::polar(1.0, 2.0 * k * z_start);
  }
  return m;
}

ScatterResult rt_from_matrix(const TransferMatrix2& m) {
  const Complex r = -m.m21 / m.m22;
  const Complex t = m.m11 - m.m12 * m.m21 / m.m22;
  return ScatterResult::make(r, t);
}

ScatterResult rt_closed_form(double k, Complex q_squared, double width) {
  if (!(k > 0.0)) {
    throw Error(ErrorKind::NonPositiveWavenumber, "free-space wavenumber must be positive");
  }
  const Complex sum = (q_squared + k * k) / k;
  const Complex diff = (q_squared - k * k) / k;
  const Complex phase = std::polar(2.0, -k * width);

  const auto cs = detail::cos_sinc(q_squared, width);
  if (!cs.scaled) {
    const Complex denom = 2.0 * cs.cos - kI * sum * cs.sinc;
    return ScatterResult::make(kI * diff * cs.sinc / denom, phase / denom);
  }
  // Deep tunnelling: cos and sin overflow, so divide through by cos(qL).
  const Complex denom = 2.0 - kI * sum * cs.tanc;
  return ScatterResult::make(kI * diff * cs.tanc / denom, phase * cs.sec / denom);
}

ScatterResult rt_rect(const QmBarrierSpec& spec, double energy) {
  const auto [k, q] = wavenumbers(energy, spec);
  return rt_closed_form(k, q.squared, spec.width);
}

DeltaBarrierSpec DeltaBarrierSpec::from_wavenumber(double strength, double k, double mass) {
  if (!(strength > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta strength must be positive");
  if (!(k > 0.0)) throw Error(ErrorKind::NonPositiveWavenumber, "wavenumber must be positive");
  return {strength, k / strength, mass};
}

ScatterResult rt_delta(const DeltaBarrierSpec& spec, double k) {
  if (!(k > 0.0)) throw Error(ErrorKind::NonPositiveWavenumber, "wavenumber must be positive");
  if (!(spec.strength > 0.0) || !(spec.gamma > 0.0) || !(spec.mass > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "delta barrier needs positive strength, gamma and mass");
  }
  const double hbar = constants().hbar;
  const Complex ix = kI * (hbar * hbar * spec.gamma / spec.mass);
  // t = 1 / (1 - m/(i hbar^2 gamma)) rewritten as ix/(ix - 1) so that x -> 0 stays finite.
  return ScatterResult::make(1.0 / (ix - 1.0), ix / (ix - 1.0));
}

std::vector<DeltaLimitRow> delta_limit_schedule(double energy, double area,
                                                std::span<const double> heights, double mass) {
  require_energy(energy);
  if (!(area > 0.0)) throw Error(ErrorKind::InvalidArgument, "barrier area must be positive");
  const double k = free_wavenumber(energy, mass);
  const auto delta_spec = DeltaBarrierSpec::from_wavenumber(area, k, mass);
  const ScatterResult limit = rt_delta(delta_spec, k);

  std::vector<DeltaLimitRow> rows;
  rows.reserve(heights.size());
  for (double vb : heights) {
    if (!(vb > energy)) {
      throw Error(ErrorKind::HeightNotAboveEnergy,
                  "schedule height " + std::to_string(vb) + " J is not above the energy");
    }
    const double width = area / vb;
    rows.push_back({vb, width, rt_rect({vb, width, mass}, energy), limit});
  }
  return rows;
}

TransferMatrix2 cascade(std::span<const TransferMatrix2> matrices) {
  if (matrices.empty()) throw Error(ErrorKind::EmptyList, "cascade needs at least one matrix");
  TransferMatrix2 total = matrices.front();
  for (std::size_t i = 1; i < matrices.size(); ++i) total = matrices[i] * total;
  return total;
}

ScatterResult rt_piecewise(std::span<const PotentialSegment> segments, double energy, double mass) {
  if (segments.empty()) throw Error(ErrorKind::EmptyList, "no potential segments");
  std::vector<TransferMatrix2> mats;
  mats.reserve(segments.size());
  double z = 0.0;
  for (const auto& seg : segments) {
    mats.push_back(transfer_matrix_rect({seg.height, seg.width, mass}, energy, z));
    z += seg.width;
  }
  return rt_from_matrix(cascade(mats));
}

}  // namespace analog::qm
