#include "analog/sweep.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "analog/csv.hpp"
#include "analog/em_scatter.hpp"
#include "analog/errors.hpp"
#include "analog/parallel.hpp"
#include "analog/qm_scatter.hpp"
#include "analog/version.hpp"

namespace analog::sweep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBandScanPoints = 512;
constexpr const char* kLosslessNote =
    "lossless wire model: no Ohmic loss, so transmission peaks do not decay with row count";

using RowFn = std::function<std::vector<double>(std::size_t)>;

SweepTable make_table(std::vector<std::string> columns, std::size_t n, const RowFn& row) {
  SweepTable table;
  table.columns = std::move(columns);
  table.rows.resize(n);
  parallel_for(n, [&](std::size_t i) { table.rows[i] = row(i); });
  return table;
}

void add_meta(SweepTable& t, std::string key, double value) {
  t.metadata.emplace_back(std::move(key), io::format_double(value));
}

void add_meta(SweepTable& t, std::string key, std::string value) {
  t.metadata.emplace_back(std::move(key), std::move(value));
}

void begin_meta(SweepTable& t, std::string_view kind) {
  t.metadata.insert(t.metadata.begin(), {{"kind", std::string(kind)}, {"version", std::string(version())}});
}

void add_wire_meta(SweepTable& t, const wire::WireArraySpec& s) {
  add_meta(t, "wire_radius_m", s.wire_radius);
  add_meta(t, "transverse_pitch_m", s.transverse_pitch);
  add_meta(t, "longitudinal_pitch_m", s.longitudinal_pitch);
  add_meta(t, "rows", static_cast<double>(s.rows));
}

em::SParams brown_slab(const wire::WireArraySpec& spec, double frequency, const wire::MediumResponse& m) {
  return em::solve_sparams({m.index, m.impedance, spec.thickness()}, em::EmWave::from_frequency(frequency));
}

}  // namespace

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  if (n > 1) out.back() = b;
  return out;
}

std::vector<double> geomspace(double a, double b, std::size_t n) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::InvalidArgument, "geomspace needs positive ends");
  std::vector<double> out = linspace(std::log(a), std::log(b), n);
  for (double& x : out) x = std::exp(x);
  if (n > 0) out.front() = a;
  if (n > 1) out.back() = b;
  return out;
}

void validate_axis(std::span<const double> axis, std::string_view name) {
  if (axis.empty()) throw Error(ErrorKind::InvalidArgument, std::string(name) + " axis is empty");
  if (axis.size() < 2) return;
  const bool up = axis[1] > axis[0];
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (up ? !(axis[i] > axis[i - 1]) : !(axis[i] < axis[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, std::string(name) + " axis is not strictly monotone");
    }
  }
}

SweepTable sweep_frequency(const wire::WireArraySpec& spec, std::span<const double> frequencies) {
  validate_axis(frequencies, "frequency");
  spec.validate();
  const double h = constants().h;
  SweepTable t = make_table(
      {"f_hz", "eps_re", "eps_im", "n_re", "n_im", "ep_j", "vb_j", "s11_sq", "s21_sq"}, frequencies.size(),
      [&](std::size_t i) {
        const double f = frequencies[i];
        const auto m = wire::brown_response(spec, f);
        const auto b = wire::effective_barrier(spec, f);
        const auto sp = brown_slab(spec, f, m);
        return std::vector<double>{f, m.permittivity.real(), m.permittivity.imag(), m.index.real(),
                                   m.index.imag(), h * f, b.barrier_height, sp.reflectance(),
                                   sp.transmittance()};
      });
  begin_meta(t, "frequency");
  add_wire_meta(t, spec);
  add_meta(t, "note", kLosslessNote);
  return t;
}

SweepTable sweep_wire_radius(const wire::WireArraySpec& base, std::span<const double> radii, double frequency) {
  validate_axis(radii, "wire radius");
  for (double r : radii) {
    wire::WireArraySpec s = base;
    s.wire_radius = r;
    s.validate();
  }
  SweepTable t = make_table({"r_m", "d_m", "eps_re", "eps_im", "vb_over_ep", "T", "R"}, radii.size(),
                            [&](std::size_t i) {
                              wire::WireArraySpec s = base;
                              s.wire_radius = radii[i];
                              const auto m = wire::brown_response(s, frequency);
                              const auto b = wire::effective_barrier(s, frequency);
                              const auto sp = brown_slab(s, frequency, m);
                              return std::vector<double>{radii[i],
                                                         2.0 * radii[i],
                                                         m.permittivity.real(),
                                                         m.permittivity.imag(),
                                                         b.barrier_height / b.photon_energy,
                                                         sp.transmittance(),
                                                         sp.reflectance()};
                            });
  begin_meta(t, "wire_radius");
  add_wire_meta(t, base);
  add_meta(t, "frequency_hz", frequency);
  add_meta(t, "note", kLosslessNote);
  return t;
}

double solve_ratio_frequency(const wire::WireArraySpec& spec, double ratio, Band band) {
  spec.validate();
  if (!(ratio > 0.0)) throw Error(ErrorKind::InvalidArgument, "energy ratio must be positive");
  if (!(band.f_min > 0.0) || !(band.f_min < band.f_max)) {
    throw Error(ErrorKind::InvalidArgument, "frequency band needs 0 < f_min < f_max");
  }
  // Ep - ratio Vb, divided by h f so the scale is O(1).
  auto g = [&](double f) {
    const auto b = wire::effective_barrier(spec, f);
    return (b.photon_energy - ratio * b.barrier_height) / b.photon_energy;
  };
  const auto grid = linspace(band.f_min, band.f_max, kBandScanPoints);
  double f0 = grid[0];
  double g0 = g(f0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double f1 = grid[i];
    const double g1 = g(f1);
    if (g0 == 0.0) return f0;
    if (std::signbit(g0) != std::signbit(g1)) {
      std::uintmax_t iters = 200;
      const auto [lo, hi] = boost::math::tools::toms748_solve(
          g, f0, f1, g0, g1, boost::math::tools::eps_tolerance<double>(), iters);
      return 0.5 * (lo + hi);
    }
    f0 = f1;
    g0 = g1;
  }
  if (g0 == 0.0) return f0;
  throw Error(ErrorKind::NoCrossingInBand,
              "Ep = " + io::format_double(ratio) + " Vb has no solution in [" + io::format_double(band.f_min) +
                  ", " + io::format_double(band.f_max) + "] Hz");
}

SweepTable sweep_width(const wire::WireArraySpec& base, double ratio, std::span<const double> rows, Band band) {
  validate_axis(rows, "row count");
  for (double n : rows) {
    if (!(n >= 1.0) || n != std::floor(n)) {
      throw Error(ErrorKind::InvalidArgument, "row counts must be positive integers");
    }
  }
  const double f = solve_ratio_frequency(base, ratio, band);
  const auto wave = em::EmWave::from_frequency(f);
  const Complex n = wire::brown_index(base, f);
  const Complex z = wire::brown_impedance(base, f, n);
  const double lambda0 = constants().c0 / f;

  SweepTable t = make_table({"rows", "L_m", "L_over_lambda0", "nk0L_re", "nk0L_im", "T", "R"}, rows.size(),
                            [&](std::size_t i) {
                              const double length = rows[i] * base.longitudinal_pitch;
                              const Complex phase = n * wave.k0 * length;
                              const auto sp = em::solve_sparams({n, z, length}, wave);
                              return std::vector<double>{rows[i], length, length / lambda0, phase.real(),
                                                         phase.imag(), sp.transmittance(), sp.reflectance()};
                            });
  begin_meta(t, ratio < 1.0 ? "width_below" : "width_above");
  add_wire_meta(t, base);
  add_meta(t, "ratio", ratio);
  add_meta(t, "frequency_hz", f);
  add_meta(t, "n_re", n.real());
  add_meta(t, "n_im", n.imag());
  add_meta(t, "q_per_m", wave.k0 * n.real());
  add_meta(t, "rho_per_m", wave.k0 * n.imag());
  add_meta(t, "note", kLosslessNote);
  return t;
}

SweepTable sweep_width_qm(double energy, double ratio, std::span<const double> widths, double mass) {
  validate_axis(widths, "width");
  if (!(energy > 0.0)) throw Error(ErrorKind::NonPositiveEnergy, "energy must be positive");
  if (!(ratio > 0.0)) throw Error(ErrorKind::InvalidArgument, "energy ratio must be positive");
  const double height = energy / ratio;
  const auto [k, q] = qm::wavenumbers(energy, {height, 1.0, mass});
  SweepTable t = make_table({"L_m", "L_over_lambda", "qL_re", "qL_im", "T", "R"}, widths.size(),
                            [&](std::size_t i) {
                              const auto rt = qm::rt_rect({height, widths[i], mass}, energy);
                              const Complex ql = q.value * widths[i];
                              return std::vector<double>{widths[i], widths[i] * k / (2.0 * kPi), ql.real(),
                                                         ql.imag(), rt.T, rt.R};
                            });
  begin_meta(t, ratio < 1.0 ? "width_below" : "width_above");
  add_meta(t, "domain", "qm");
  add_meta(t, "energy_j", energy);
  add_meta(t, "height_j", height);
  add_meta(t, "mass_kg", mass);
  add_meta(t, "k_per_m", k);
  add_meta(t, "q_re_per_m", q.value.real());
  add_meta(t, "q_im_per_m", q.value.imag());
  return t;
}

SweepTable sweep_barrier_height(double energy, double width, std::span<const double> heights, double mass) {
  validate_axis(heights, "barrier height");
  if (!(energy > 0.0)) throw Error(ErrorKind::NonPositiveEnergy, "energy must be positive");
  SweepTable t = make_table({"vb_j", "vb_over_e", "T", "R"}, heights.size(), [&](std::size_t i) {
    const auto rt = qm::rt_rect({heights[i], width, mass}, energy);
    return std::vector<double>{heights[i], heights[i] / energy, rt.T, rt.R};
  });
  begin_meta(t, "barrier_height");
  add_meta(t, "energy_j", energy);
  add_meta(t, "width_m", width);
  add_meta(t, "mass_kg", mass);
  return t;
}

SweepTable table1(const TableOneSpec& spec) {
  validate_axis(spec.b_axis, "lattice pitch b");
  const wire::WireArraySpec anchor{spec.wire_radius, spec.anchor_a, spec.anchor_b, 1};
  const double target = wire::effective_barrier(anchor, spec.frequency).barrier_height * spec.anchor_b;

  SweepTable t = make_table(
      {"b_m", "a_m", "vb_j", "vb_b_jm", "L_m", "T", "R"}, spec.b_axis.size(), [&](std::size_t i) {
        const double b = spec.b_axis[i];
        const double a = wire::solve_lattice_a(b, target, spec.frequency, spec.wire_radius).transverse_pitch;
        const wire::WireArraySpec s{spec.wire_radius, a, b, spec.rows};
        const double vb = wire::effective_barrier(s, spec.frequency).barrier_height;
        const auto sp = brown_slab(s, spec.frequency, wire::brown_response(s, spec.frequency));
        return std::vector<double>{b, a, vb, vb * b, s.thickness(), sp.transmittance(), sp.reflectance()};
      });
  begin_meta(t, "table1");
  add_meta(t, "frequency_hz", spec.frequency);
  add_meta(t, "wire_radius_m", spec.wire_radius);
  add_meta(t, "anchor_a_m", spec.anchor_a);
  add_meta(t, "anchor_b_m", spec.anchor_b);
  add_meta(t, "rows", static_cast<double>(spec.rows));
  add_meta(t, "target_vb_b_jm", target);
  add_meta(t, "note", kLosslessNote);
  return t;
}

DeltaSweep sweep_delta(double energy, double area, std::span<const double> heights, const TableOneSpec& em,
                       double mass) {
  validate_axis(heights, "barrier height");
  const auto schedule = qm::delta_limit_schedule(energy, area, heights, mass);
  DeltaSweep out;
  out.qm.columns = {"vb_j", "L_m", "T", "R", "T_delta", "R_delta"};
  for (const auto& row : schedule) {
    out.qm.rows.push_back({row.height, row.width, row.rect.T, row.rect.R, row.delta.T, row.delta.R});
  }
  begin_meta(out.qm, "delta_limit");
  add_meta(out.qm, "energy_j", energy);
  add_meta(out.qm, "area_jm", area);
  add_meta(out.qm, "mass_kg", mass);
  out.em = table1(em);
  return out;
}

namespace {

constexpr std::pair<SweepKind, std::string_view> kKindNames[] = {
    {SweepKind::frequency, "frequency"},       {SweepKind::wire_radius, "wire_radius"},
    {SweepKind::barrier_height, "barrier_height"}, {SweepKind::width_below, "width_below"},
    {SweepKind::width_above, "width_above"},   {SweepKind::delta_limit, "delta_limit"},
};

}  // namespace

std::string_view to_string(SweepKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

SweepKind parse_sweep_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw Error(ErrorKind::ConfigError, "unknown sweep kind '" + std::string(text) + "'");
}

SweepTable run_sweep(const SweepSpec& spec) {
  switch (spec.kind) {
    case SweepKind::frequency:
      return sweep_frequency(spec.wire, spec.axis);
    case SweepKind::wire_radius:
      return sweep_wire_radius(spec.wire, spec.axis, spec.frequency);
    case SweepKind::barrier_height:
      return sweep_barrier_height(spec.energy, spec.width, spec.axis, spec.mass);
    case SweepKind::width_below:
    case SweepKind::width_above: {
      const double ratio =
          spec.ratio > 0.0 ? spec.ratio : (spec.kind == SweepKind::width_below ? 0.95 : 1.05);
      return spec.domain == Domain::em ? sweep_width(spec.wire, ratio, spec.axis, spec.band)
                                       : sweep_width_qm(spec.energy, ratio, spec.axis, spec.mass);
    }
    case SweepKind::delta_limit:
      return sweep_delta(spec.energy, spec.area, spec.axis, {}, spec.mass).qm;
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled sweep kind");
}

}  // namespace analog::sweep
