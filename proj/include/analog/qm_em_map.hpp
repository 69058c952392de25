#pragma once

#include <optional>
#include <span>
#include <vector>

#include "analog/em_scatter.hpp"
#include "analog/nrw.hpp"
#include "analog/qm_scatter.hpp"
#include "analog/units.hpp"
#include "analog/wire_medium.hpp"

// Maps a frequency-dependent EM index n(f) of a slab of thickness d onto a
// family of QM rectangular barriers, one per sample, such that
//   q / k = sqrt(Re n^2)   and   k L = k0 d.
// The QM wavenumber axis is arbitrary; the mapped coefficients depend only on
// n and k0 d.
namespace analog::mapping {

struct MappingConfig {
  double k_min = 1e9;   // 1/m
  double k_max = 1e10;  // 1/m
  double mass = constants().m_e;

  void validate() const;
};

struct IndexSample {
  double frequency = 0.0;            // EM frequency, Hz
  Complex index;                     // n
  std::optional<Complex> impedance;  // Z of the medium, if known
};

struct MappedSample {
  // EM side
  double frequency = 0.0;
  Complex index;
  std::optional<Complex> impedance;
  double k0 = 0.0;
  // QM side
  double k = 0.0;
  double energy = 0.0;          // E0 = hbar^2 k^2 / 2m
  double qm_frequency = 0.0;    // nu = c0 k / 2 pi
  double barrier_height = 0.0;  // Vb = E0 (1 - Re n^2)
  qm::BarrierWavenumber q;      // q^2 = k^2 Re n^2
  double width = 0.0;           // L = k0 d / k
};

struct MappedQmSystem {
  std::vector<MappedSample> samples;
  double thickness = 0.0;  // EM slab d, m
  MappingConfig config;
};

/// EmptySeries for no samples; InvalidArgument for d <= 0 or f <= 0.
MappedQmSystem em_to_qm(std::span<const IndexSample> series, double thickness,
                        const MappingConfig& config = {});

/// QM (r, t) of each mapped barrier.
std::vector<ScatterResult> mapped_coefficients(const MappedQmSystem& system);

enum class EquivalenceMode {
  formal,    // EM slab with index and impedance both q / k
  physical,  // EM slab with the sample's own n and Z
};

struct EquivalenceReport {
  EquivalenceMode mode = EquivalenceMode::formal;
  std::vector<double> dev_r;  // |r - s11| per sample
  std::vector<double> dev_t;  // |t - s21| per sample
  double max_abs_dev_r = 0.0;
  double max_abs_dev_t = 0.0;
};

/// MissingImpedance in physical mode when a sample has no impedance.
EquivalenceReport equivalence_check(const MappedQmSystem& system, EquivalenceMode mode);

/// n(f) and Z(f) of a Brown wire array on the given frequencies.
std::vector<IndexSample> brown_index_series(const wire::WireArraySpec& spec,
                                            std::span<const double> frequencies);

/// Determinate rows of an NRW extraction as (f, n, Z) samples.
std::vector<IndexSample> index_series_from(const nrw::ExtractedParams& params);

struct EffectiveViewRow {
  double frequency = 0.0;
  double photon_energy = 0.0;
  double barrier_height = 0.0;
  Complex permittivity;
};

struct EffectiveView {
  std::vector<EffectiveViewRow> rows;

  /// Frequencies where Ep - Vb changes sign, linearly interpolated.
  std::vector<double> energy_crossings() const;
  /// Frequencies where Re(eps) changes sign, linearly interpolated.
  std::vector<double> permittivity_zero_crossings() const;
};

/// Ep and Vb of the wire array on the photon (effective-mass) scale.
EffectiveView em_effective_view(const wire::WireArraySpec& spec, std::span<const double> frequencies);

}  // namespace analog::mapping
