#include "analog/em_scatter.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "analog/errors.hpp"
#include "analog/units.hpp"
#include "trig.hpp"

namespace analog::em {

namespace {

constexpr double kMinImpedance = 1e-300;
constexpr double kSignSlack = 1e-12;

void require_impedance(Complex z) {
  if (!(std::abs(z) >= kMinImpedance)) {
    throw Error(ErrorKind::ZeroImpedance, "slab impedance is zero");
  }
}

constexpr std::array<int, 2> block(Polarization pol) {
  return pol == Polarization::first ? std::array<int, 2>{0, 3} : std::array<int, 2>{1, 2};
}

}  // namespace

void SlabSpec::validate() const {
  if (!(thickness >= 0.0) || !std::isfinite(thickness)) {
    throw Error(ErrorKind::InvalidArgument, "slab thickness must be finite and >= 0");
  }
  if (index.imag() < -kSignSlack * std::abs(index)) {
    throw Error(ErrorKind::InvalidArgument, "slab index must satisfy Im(n) >= 0 (passive medium)");
  }
  if (impedance.real() < -kSignSlack * std::abs(impedance)) {
    throw Error(ErrorKind::InvalidArgument, "slab impedance must satisfy Re(Z) >= 0");
  }
  require_impedance(impedance);
}

EmWave EmWave::from_frequency(double frequency) {
  if (!(frequency > 0.0) || !std::isfinite(frequency)) {
    throw Error(ErrorKind::InvalidArgument, "frequency must be positive, got " + std::to_string(frequency));
  }
  return {frequency, 2.0 * std::numbers::pi * frequency / constants().c0};
}

TransferMatrix4 TransferMatrix4::identity() {
  TransferMatrix4 out;
  for (int i = 0; i < 4; ++i) out.m[i][i] = 1.0;
  return out;
}

PolarizationVector PolarizationVector::make(Polarization pol, Direction dir, Complex z) {
  PolarizationVector v;
  v.direction = dir;
  const double sign = dir == Direction::forward ? 1.0 : -1.0;
  if (pol == Polarization::first) {
    v.components = {sign * z, 0.0, 0.0, 1.0};
  } else {
    v.components = {0.0, -sign * z, 1.0, 0.0};
  }
  return v;
}

Polarization PolarizationVector::polarization() const {
  const bool in_first = components[0] != 0.0 || components[3] != 0.0;
  const bool in_second = components[1] != 0.0 || components[2] != 0.0;
  if (in_first == in_second) {
    throw Error(ErrorKind::PatternViolation, "vector does not belong to a single polarization");
  }
  return in_first ? Polarization::first : Polarization::second;
}

std::array<Complex, 2> PolarizationVector::reduced() const {
  const auto idx = block(polarization());
  return {components[idx[0]], components[idx[1]]};
}

TransferMatrix4 transfer_matrix_4x4(const SlabSpec& slab, const EmWave& wave) {
  slab.validate();
  const Complex z = slab.impedance;
  const Complex q = slab.index * wave.k0;
  const Complex fwd = std::exp(kI * q * slab.thickness);
  const Complex rev = std::exp(-kI * q * slab.thickness);

  // Columns: forward/reverse eigenvectors of polarization 1, then 2.
  const Complex w[4][4] = {
      {z * fwd, -z * rev, 0.0, 0.0},
      {0.0, 0.0, -z * fwd, z * rev},
      {0.0, 0.0, fwd, rev},
      {fwd, rev, 0.0, 0.0},
  };
  const Complex half_over_z = 0.5 / z;
  const Complex w0_inv[4][4] = {
      {half_over_z, 0.0, 0.0, 0.5},
      {-half_over_z, 0.0, 0.0, 0.5},
      {0.0, -half_over_z, 0.5, 0.0},
      {0.0, half_over_z, 0.5, 0.0},
  };

  TransferMatrix4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += w[i][k] * w0_inv[k][j];
      out.m[i][j] = acc;
    }
  }
  return out;
}

TransferMatrix2 reduce_to_2x2(const TransferMatrix4& m4, Polarization pol) {
  const auto idx = block(pol);
  double scale = 0.0;
  for (const auto& row : m4.m) {
    for (const auto& v : row) scale = std::max(scale, std::abs(v));
  }
  const auto in_block = [&](int i) { return i == idx[0] || i == idx[1]; };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (in_block(i) != in_block(j) && std::abs(m4.m[i][j]) > 1e-12 * scale) {
        throw Error(ErrorKind::PatternViolation,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") couples polarizations");
      }
    }
  }
  return {m4.m[idx[0]][idx[0]], m4.m[idx[0]][idx[1]], m4.m[idx[1]][idx[0]], m4.m[idx[1]][idx[1]]};
}

TransferMatrix2 reduce_to_2x2(const TransferMatrix4& m4, const PolarizationVector& pol) {
  return reduce_to_2x2(m4, pol.polarization());
}

TransferMatrix2 slab_matrix_2x2(const SlabSpec& slab, const EmWave& wave, Polarization pol) {
  slab.validate();
  const Complex z = slab.impedance;
  const auto cs = detail::cos_sin(slab.index * wave.k0 * slab.thickness, false);
  const double sign = pol == Polarization::first ? 1.0 : -1.0;
  return {cs.cos, sign * kI * z * cs.sin, sign * kI / z * cs.sin, cs.cos};
}

SParams sparams_from_matrix(const TransferMatrix2& m, Polarization pol, const EmWave& wave,
                            double total_thickness) {
  const Complex a = m.m11, b = m.m12, c = m.m21, e = m.m22;
  Complex r, tau;
  if (pol == Polarization::second) {
    // Vacuum eigenvectors on (Ey, Hx): forward (-1, 1), reverse (1, 1).
    r = ((a + c) - (b + e)) / ((a + c) + (b + e));
    tau = (e - c) + r * (c + e);
  } else {
    // On (Ex, Hy): forward (1, 1), reverse (-1, 1).
    r = ((a - c) + (b - e)) / ((a - c) - (b - e));
    tau = c * (1.0 - r) + e * (1.0 + r);
  }
  return {r, tau * std::polar(1.0, -wave.k0 * total_thickness)};
}

SParams solve_sparams(const SlabSpec& slab, const EmWave& wave) {
  slab.validate();
  const Complex z = slab.impedance;
  const Complex mismatch = z - 1.0 / z;
  const Complex sum = z + 1.0 / z;
  const Complex phase = std::polar(2.0, -wave.k0 * slab.thickness);
  const auto cs = detail::cos_sin(slab.index * wave.k0 * slab.thickness);
  if (!cs.scaled) {
    const Complex denom = 2.0 * cs.cos - kI * sum * cs.sin;
    return {kI * mismatch * cs.sin / denom, phase / denom};
  }
  const Complex denom = 2.0 - kI * sum * cs.tan;
  return {kI * mismatch * cs.tan / denom, phase * cs.sec / denom};
}

SParams cascade_slabs(std::span<const SlabSpec> slabs, const EmWave& wave, Polarization pol) {
  if (slabs.empty()) throw Error(ErrorKind::EmptyList, "cascade_slabs needs at least one slab");
  TransferMatrix2 total = TransferMatrix2::identity();
  double thickness = 0.0;
  for (const auto& slab : slabs) {
    total = slab_matrix_2x2(slab, wave, pol) * total;
    thickness += slab.thickness;
  }
  return sparams_from_matrix(total, pol, wave, thickness);
}

}  // namespace analog::em
