#pragma once

#include <array>
#include <span>

#include "analog/types.hpp"

// Normal-incidence plane waves on homogeneous slabs, time factor e^{-i omega t}.
// Impedances are normalized to free space (vacuum Z = 1). The slab occupies
// [0, d]; s11 is referenced to z = 0 and s21 carries the e^{-i k0 d} factor of
// the z = d reference plane.
namespace analog::em {

struct SlabSpec {
  Complex index{1.0};      // n, Im(n) >= 0
  Complex impedance{1.0};  // Z, Re(Z) >= 0
  double thickness = 0.0;  // d, m

  void validate() const;
};

struct EmWave {
  double frequency = 0.0;  // Hz
  double k0 = 0.0;         // 2 pi f / c0

  static EmWave from_frequency(double frequency);
};

/// Field transfer matrix acting on (Ex, Ey, Hx, Hy).
struct TransferMatrix4 {
  std::array<std::array<Complex, 4>, 4> m{};

  static TransferMatrix4 identity();
};

struct SParams {
  Complex s11;
  Complex s21;

  double reflectance() const { return std::norm(s11); }
  double transmittance() const { return std::norm(s21); }
};

/// Polarization 1 lives on (Ex, Hy), polarization 2 on (Ey, Hx).
enum class Polarization { first, second };
enum class Direction { forward, reverse };

struct PolarizationVector {
  std::array<Complex, 4> components{};
  Direction direction = Direction::forward;

  /// Eigenvector of a medium with normalized impedance z.
  static PolarizationVector make(Polarization pol, Direction dir, Complex z);

  /// Which block the nonzero entries occupy; PatternViolation if both.
  Polarization polarization() const;
  std::array<Complex, 2> reduced() const;
};

/// T(d, 0) = W(d) W^{-1}(0) built from the forward/reverse eigenvectors.
TransferMatrix4 transfer_matrix_4x4(const SlabSpec& slab, const EmWave& wave);

/// Extracts the 2x2 block of one polarization. PatternViolation if the
/// matrix couples that block to the other one.
TransferMatrix2 reduce_to_2x2(const TransferMatrix4& m4, Polarization pol = Polarization::second);
TransferMatrix2 reduce_to_2x2(const TransferMatrix4& m4, const PolarizationVector& pol);

/// Closed-form 2x2 slab matrix, equal to the reduced 4x4 one.
TransferMatrix2 slab_matrix_2x2(const SlabSpec& slab, const EmWave& wave,
                                Polarization pol = Polarization::second);

/// S-parameters of a 2x2 field matrix spanning total_thickness, with vacuum on
/// both sides.
SParams sparams_from_matrix(const TransferMatrix2& m, Polarization pol, const EmWave& wave,
                            double total_thickness);

/// s11 = i(Z - 1/Z) sin(qd) / D, s21 = 2 e^{-i k0 d} / D,
/// D = 2 cos(qd) - i(Z + 1/Z) sin(qd), q = n k0. Complex q covers the
/// evanescent and lossy cases with the same expression.
SParams solve_sparams(const SlabSpec& slab, const EmWave& wave);

/// Slabs in spatial order, vacuum on both sides.
SParams cascade_slabs(std::span<const SlabSpec> slabs, const EmWave& wave,
                      Polarization pol = Polarization::second);

}  // namespace analog::em
