#include "analog/qm_em_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "analog/errors.hpp"

namespace analog::mapping {

namespace {

constexpr double kPi = std::numbers::pi;

template <class Row, class Value>
std::vector<double> sign_changes(const std::vector<Row>& rows, Value value) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double y0 = value(rows[i]);
    const double y1 = value(rows[i + 1]);
    if (y0 == 0.0) {
      out.push_back(rows[i].frequency);
    } else if (std::signbit(y0) != std::signbit(y1) && y1 != 0.0) {
      const double f0 = rows[i].frequency;
      const double f1 = rows[i + 1].frequency;
      out.push_back(f0 + (f1 - f0) * y0 / (y0 - y1));
    }
  }
  if (!rows.empty() && value(rows.back()) == 0.0) out.push_back(rows.back().frequency);
  return out;
}

}  // namespace

void MappingConfig::validate() const {
  if (!(k_min > 0.0) || !(k_min < k_max) || !std::isfinite(k_max)) {
    throw Error(ErrorKind::InvalidArgument, "mapping needs 0 < k_min < k_max");
  }
  if (!(mass > 0.0)) throw Error(ErrorKind::InvalidArgument, "mapping mass must be positive");
}

MappedQmSystem em_to_qm(std::span<const IndexSample> series, double thickness,
                        const MappingConfig& config) {
  if (series.empty()) throw Error(ErrorKind::EmptySeries, "index series has no samples");
  if (!(thickness > 0.0)) throw Error(ErrorKind::InvalidArgument, "slab thickness must be positive");
  config.validate();

  const auto& pc = constants();
  MappedQmSystem out;
  out.thickness = thickness;
  out.config = config;
  out.samples.reserve(series.size());

  const std::size_t count = series.size();
  for (std::size_t i = 0; i < count; ++i) {
    const IndexSample& src = series[i];
    if (!(src.frequency > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "sample frequency must be positive (index " + std::to_string(i) + ")");
    }
    MappedSample s;
    s.frequency = src.frequency;
    s.index = src.index;
    s.impedance = src.impedance;
    s.k0 = 2.0 * kPi * src.frequency / pc.c0;

    s.k = count == 1 ? config.k_min
                     : config.k_min + (config.k_max - config.k_min) * static_cast<double>(i) /
                                          static_cast<double>(count - 1);
    s.energy = pc.hbar * pc.hbar * s.k * s.k / (2.0 * config.mass);
    s.qm_frequency = pc.c0 * s.k / (2.0 * kPi);

    const double n2 = (src.index * src.index).real();
    const double photon_term =
        pc.h * pc.h * s.qm_frequency * s.qm_frequency / (2.0 * config.mass * pc.c0 * pc.c0);
    s.barrier_height = s.energy - photon_term * n2;

    s.q.squared = s.k * s.k * n2;
    if (n2 > 0.0) {
      s.q.value = s.k * std::sqrt(n2);
      s.q.regime = qm::Regime::above;
    } else if (n2 < 0.0) {
      s.q.value = Complex(0.0, s.k * std::sqrt(-n2));
      s.q.regime = qm::Regime::below;
    } else {
      s.q.value = 0.0;
      s.q.regime = qm::Regime::degenerate;
    }
    s.width = s.k0 * thickness / s.k;
    out.samples.push_back(s);
  }
  return out;
}

std::vector<ScatterResult> mapped_coefficients(const MappedQmSystem& system) {
  std::vector<ScatterResult> out;
  out.reserve(system.samples.size());
  for (const MappedSample& s : system.samples) {
    out.push_back(qm::rt_closed_form(s.k, s.q.squared, s.width));
  }
  return out;
}

EquivalenceReport equivalence_check(const MappedQmSystem& system, EquivalenceMode mode) {
  EquivalenceReport report;
  report.mode = mode;
  const auto qm_side = mapped_coefficients(system);
  for (std::size_t i = 0; i < system.samples.size(); ++i) {
    const MappedSample& s = system.samples[i];
    em::SlabSpec slab;
    slab.thickness = system.thickness;
    if (mode == EquivalenceMode::formal) {
      slab.index = s.q.value / s.k;
      slab.impedance = slab.index;
    } else {
      if (!s.impedance) {
        throw Error(ErrorKind::MissingImpedance,
                    "physical comparison needs Z at f = " + std::to_string(s.frequency));
      }
      slab.index = s.index;
      slab.impedance = *s.impedance;
    }
    const em::SParams sp = em::solve_sparams(slab, {s.frequency, s.k0});
    report.dev_r.push_back(std::abs(qm_side[i].r - sp.s11));
    report.dev_t.push_back(std::abs(qm_side[i].t - sp.s21));
    report.max_abs_dev_r = std::max(report.max_abs_dev_r, report.dev_r.back());
    report.max_abs_dev_t = std::max(report.max_abs_dev_t, report.dev_t.back());
  }
  return report;
}

std::vector<IndexSample> brown_index_series(const wire::WireArraySpec& spec,
                                            std::span<const double> frequencies) {
  std::vector<IndexSample> out;
  out.reserve(frequencies.size());
  for (double f : frequencies) {
    const auto m = wire::brown_response(spec, f);
    out.push_back({f, m.index, m.impedance});
  }
  return out;
}

std::vector<IndexSample> index_series_from(const nrw::ExtractedParams& params) {
  std::vector<IndexSample> out;
  for (const auto& row : params.rows) {
    if (!row.indeterminate) out.push_back({row.frequency, row.index, row.impedance});
  }
  return out;
}

std::vector<double> EffectiveView::energy_crossings() const {
  return sign_changes(rows, [](const EffectiveViewRow& r) { return r.photon_energy - r.barrier_height; });
}

std::vector<double> EffectiveView::permittivity_zero_crossings() const {
  return sign_changes(rows, [](const EffectiveViewRow& r) { return r.permittivity.real(); });
}

EffectiveView em_effective_view(const wire::WireArraySpec& spec, std::span<const double> frequencies) {
  EffectiveView view;
  view.rows.reserve(frequencies.size());
  for (double f : frequencies) {
    const auto barrier = wire::effective_barrier(spec, f);
    const auto medium = wire::brown_response(spec, f);
    view.rows.push_back({f, barrier.photon_energy, barrier.barrier_height, medium.permittivity});
  }
  return view;
}

}  // namespace analog::mapping
