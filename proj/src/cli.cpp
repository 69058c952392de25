#include "analog/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <vector>

#include "analog/config.hpp"
#include "analog/csv.hpp"
#include "analog/em_scatter.hpp"
#include "analog/errors.hpp"
#include "analog/nrw.hpp"
#include "analog/qm_em_map.hpp"
#include "analog/qm_scatter.hpp"
#include "analog/sweep.hpp"
#include "analog/touchstone.hpp"
#include "analog/version.hpp"
#include "analog/wire_medium.hpp"

namespace analog {

namespace {

struct OutputOptions {
  std::string path;
  bool json = false;
};

struct WireOptions {
  double r_mm = 0.0;
  double a_mm = 0.0;
  double b_mm = 0.0;
  int rows = 5;
  double f_min_ghz = 1.0;
  double f_max_ghz = 10.0;
  std::size_t points = 300;

  wire::WireArraySpec spec() const { return {r_mm * 1e-3, a_mm * 1e-3, b_mm * 1e-3, rows}; }
  std::vector<double> frequencies() const { return sweep::linspace(f_min_ghz * 1e9, f_max_ghz * 1e9, points); }
};

void add_wire_options(CLI::App* cmd, WireOptions& w, bool required) {
  cmd->add_option("--r-mm", w.r_mm, "wire radius (mm)")->required(required);
  cmd->add_option("--a-mm", w.a_mm, "transverse pitch a (mm)")->required(required);
  cmd->add_option("--b-mm", w.b_mm, "longitudinal pitch b (mm)")->required(required);
  cmd->add_option("--rows", w.rows, "number of wire rows N")->capture_default_str();
  cmd->add_option("--f-min-ghz", w.f_min_ghz, "lowest frequency (GHz)")->capture_default_str();
  cmd->add_option("--f-max-ghz", w.f_max_ghz, "highest frequency (GHz)")->capture_default_str();
  cmd->add_option("--points", w.points, "number of frequencies")->capture_default_str()->check(
      CLI::PositiveNumber);
}

void emit(const SweepTable& table, const OutputOptions& o, std::ostream& out) {
  const std::string text = o.json ? io::write_json_envelope(table) : io::write_csv(table);
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.path);
  file << text;
}

void stamp(SweepTable& t, std::string_view command) {
  if (t.meta("version") == nullptr) t.metadata.insert(t.metadata.begin(), {"version", std::string(version())});
  t.metadata.insert(t.metadata.begin(), {"command", std::string(command)});
}

void meta(SweepTable& t, std::string key, double value) { t.metadata.emplace_back(std::move(key), io::format_double(value)); }

nrw::SParamSeries load_series(const std::string& path, double thickness, std::ostream& err) {
  const auto doc = io::read_touchstone(path);
  for (const auto& w : doc.warnings) err << "warning: " << w << "\n";
  return io::to_series(doc, thickness);
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum/electromagnetic barrier analogue bench", "analog-bench"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  OutputOptions output;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--out", output.path, "write to this file instead of stdout");
    cmd->add_flag("--json", output.json, "emit a JSON envelope with metadata instead of CSV");
  };
  const double eV = constants().eV;
  std::function<SweepTable()> action;

  // qm-barrier
  struct {
    double vb_ev = 0, width_mm = 0, energy_ev = 0, mass_kg = constants().m_e;
  } qb;
  auto* qm_cmd = app.add_subcommand("qm-barrier", "r and t of a rectangular barrier");
  qm_cmd->add_option("--vb-ev", qb.vb_ev, "barrier height (eV)")->required();
  qm_cmd->add_option("--width-mm", qb.width_mm, "barrier width (mm)")->required();
  qm_cmd->add_option("--energy-ev", qb.energy_ev, "particle energy (eV)")->required();
  qm_cmd->add_option("--mass-kg", qb.mass_kg, "particle mass (kg)")->capture_default_str();
  common(qm_cmd);
  qm_cmd->callback([&] {
    action = [&] {
      const qm::QmBarrierSpec spec{qb.vb_ev * eV, qb.width_mm * 1e-3, qb.mass_kg};
      const double energy = qb.energy_ev * eV;
      const auto rt = qm::rt_rect(spec, energy);
      SweepTable t;
      t.columns = {"energy_j", "vb_j", "width_m", "r_re", "r_im", "t_re", "t_im", "R", "T"};
      t.rows.push_back({energy, spec.height, spec.width, rt.r.real(), rt.r.imag(), rt.t.real(), rt.t.imag(),
                        rt.R, rt.T});
      stamp(t, "qm-barrier");
      meta(t, "mass_kg", spec.mass);
      return t;
    };
  });

  // em-slab
  struct {
    double n_re = 1, n_im = 0, z_re = 1, z_im = 0, thickness_mm = 0, f_ghz = 0;
  } es;
  auto* em_cmd = app.add_subcommand("em-slab", "S-parameters of a homogeneous slab in vacuum");
  em_cmd->add_option("--n-re", es.n_re, "Re(n)")->required();
  em_cmd->add_option("--n-im", es.n_im, "Im(n)")->capture_default_str();
  em_cmd->add_option("--z-re", es.z_re, "Re(Z), normalized")->capture_default_str();
  em_cmd->add_option("--z-im", es.z_im, "Im(Z), normalized")->capture_default_str();
  em_cmd->add_option("--thickness-mm", es.thickness_mm, "slab thickness (mm)")->required();
  em_cmd->add_option("--f-ghz", es.f_ghz, "frequency (GHz)")->required();
  common(em_cmd);
  em_cmd->callback([&] {
    action = [&] {
      const em::SlabSpec slab{{es.n_re, es.n_im}, {es.z_re, es.z_im}, es.thickness_mm * 1e-3};
      const double f = es.f_ghz * 1e9;
      const auto sp = em::solve_sparams(slab, em::EmWave::from_frequency(f));
      SweepTable t;
      t.columns = {"f_hz", "s11_re", "s11_im", "s21_re", "s21_im", "R", "T"};
      t.rows.push_back({f, sp.s11.real(), sp.s11.imag(), sp.s21.real(), sp.s21.imag(), sp.reflectance(),
                        sp.transmittance()});
      stamp(t, "em-slab");
      return t;
    };
  });

  // wire-array
  WireOptions wa;
  auto* wire_cmd = app.add_subcommand("wire-array", "Brown wire-array medium over a frequency band");
  add_wire_options(wire_cmd, wa, true);
  common(wire_cmd);
  wire_cmd->callback([&] {
    action = [&] {
      auto t = sweep::sweep_frequency(wa.spec(), wa.frequencies());
      stamp(t, "wire-array");
      return t;
    };
  });

  // nrw
  struct {
    std::string input;
    double thickness_mm = 0;
    bool field_s11 = false;
    std::optional<int> initial_branch;
  } nr;
  auto* nrw_cmd = app.add_subcommand("nrw", "extract n, Z, eps, mu from a two-port Touchstone file");
  nrw_cmd->add_option("--input", nr.input, "Touchstone v1 .s2p file")->required()->check(CLI::ExistingFile);
  nrw_cmd->add_option("--thickness-mm", nr.thickness_mm, "slab thickness (mm)")->required();
  nrw_cmd->add_flag("--field-s11", nr.field_s11, "s11 uses the electric-field sign convention");
  nrw_cmd->add_option("--initial-branch", nr.initial_branch, "arccos branch of the first row");
  common(nrw_cmd);
  nrw_cmd->callback([&] {
    action = [&] {
      nrw::NrwOptions opt;
      opt.initial_branch = nr.initial_branch;
      opt.convention = nr.field_s11 ? nrw::S11Convention::electric_field : nrw::S11Convention::slab_model;
      const auto res = nrw::extract(load_series(nr.input, nr.thickness_mm * 1e-3, err), opt);
      SweepTable t;
      t.columns = {"f_hz",   "z_re",   "z_im",  "n_re",  "n_im",   "eps_re",
                   "eps_im", "mu_re",  "mu_im", "branch", "indeterminate"};
      for (const auto& r : res.rows) {
        t.rows.push_back({r.frequency, r.impedance.real(), r.impedance.imag(), r.index.real(), r.index.imag(),
                          r.permittivity.real(), r.permittivity.imag(), r.permeability.real(),
                          r.permeability.imag(), static_cast<double>(r.branch), r.indeterminate ? 1.0 : 0.0});
      }
      stamp(t, "nrw");
      meta(t, "thickness_m", res.thickness);
      return t;
    };
  });

  // map
  struct {
    std::string source = "brown";
    std::string mode = "formal";
    std::string input;
    double thickness_mm = 0;
    bool field_s11 = false;
    double k_min = 1e9, k_max = 1e10, mass_kg = constants().m_e;
  } mp;
  WireOptions mw;
  auto* map_cmd = app.add_subcommand("map", "map an EM index series onto QM barriers");
  map_cmd->add_option("--source", mp.source, "index source")
      ->check(CLI::IsMember({"brown", "s2p"}))
      ->capture_default_str();
  map_cmd->add_option("--mode", mp.mode, "EM reference for the deviation columns")
      ->check(CLI::IsMember({"formal", "physical"}))
      ->capture_default_str();
  add_wire_options(map_cmd, mw, false);
  map_cmd->add_option("--input", mp.input, "Touchstone file (source s2p)")->check(CLI::ExistingFile);
  map_cmd->add_option("--thickness-mm", mp.thickness_mm, "slab thickness (source s2p)");
  map_cmd->add_flag("--field-s11", mp.field_s11, "s11 uses the electric-field sign convention");
  map_cmd->add_option("--k-min", mp.k_min, "lowest QM wavenumber (1/m)")->capture_default_str();
  map_cmd->add_option("--k-max", mp.k_max, "highest QM wavenumber (1/m)")->capture_default_str();
  map_cmd->add_option("--mass-kg", mp.mass_kg, "QM particle mass (kg)")->capture_default_str();
  common(map_cmd);
  map_cmd->callback([&] {
    if (mp.source == "brown" && (mw.r_mm <= 0 || mw.a_mm <= 0 || mw.b_mm <= 0)) {
      throw CLI::ValidationError("--source brown needs --r-mm, --a-mm and --b-mm");
    }
    if (mp.source == "s2p" && (mp.input.empty() || mp.thickness_mm <= 0)) {
      throw CLI::ValidationError("--source s2p needs --input and --thickness-mm");
    }
    action = [&] {
      std::vector<mapping::IndexSample> series;
      double thickness = 0.0;
      if (mp.source == "brown") {
        series = mapping::brown_index_series(mw.spec(), mw.frequencies());
        thickness = mw.spec().thickness();
      } else {
        nrw::NrwOptions opt;
        opt.convention = mp.field_s11 ? nrw::S11Convention::electric_field : nrw::S11Convention::slab_model;
        thickness = mp.thickness_mm * 1e-3;
        series = mapping::index_series_from(nrw::extract(load_series(mp.input, thickness, err), opt));
      }
      const auto sys = mapping::em_to_qm(series, thickness, {mp.k_min, mp.k_max, mp.mass_kg});
      const auto rt = mapping::mapped_coefficients(sys);
      const auto rep = mapping::equivalence_check(
          sys, mp.mode == "formal" ? mapping::EquivalenceMode::formal : mapping::EquivalenceMode::physical);
      SweepTable t;
      t.columns = {"f_hz", "k_per_m", "e0_j", "nu_hz", "vb_j", "q_re", "q_im", "L_m",
                   "r_re", "r_im",    "t_re", "t_im",  "R",    "T",    "dev_r", "dev_t"};
      for (std::size_t i = 0; i < sys.samples.size(); ++i) {
        const auto& s = sys.samples[i];
        t.rows.push_back({s.frequency, s.k, s.energy, s.qm_frequency, s.barrier_height, s.q.value.real(),
                          s.q.value.imag(), s.width, rt[i].r.real(), rt[i].r.imag(), rt[i].t.real(),
                          rt[i].t.imag(), rt[i].R, rt[i].T, rep.dev_r[i], rep.dev_t[i]});
      }
      stamp(t, "map");
      t.metadata.emplace_back("source", mp.source);
      t.metadata.emplace_back("mode", mp.mode);
      meta(t, "thickness_m", thickness);
      meta(t, "max_dev_r", rep.max_abs_dev_r);
      meta(t, "max_dev_t", rep.max_abs_dev_t);
      return t;
    };
  });

  // sweep
  std::string config_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep described by a JSON config");
  sweep_cmd->add_option("--config", config_path, "run configuration (JSON)")->required()->check(
      CLI::ExistingFile);
  common(sweep_cmd);
  sweep_cmd->callback([&] {
    action = [&] {
      auto t = sweep::run_sweep(io::read_config(config_path).sweep);
      stamp(t, "sweep");
      return t;
    };
  });

  // delta-limit
  struct {
    double energy_ev = 0, area = 0, mass_kg = constants().m_e;
    std::vector<double> heights_ev;
  } dl;
  auto* delta_cmd = app.add_subcommand("delta-limit", "constant-area barriers approaching a delta barrier");
  delta_cmd->add_option("--energy-ev", dl.energy_ev, "particle energy (eV)")->required();
  delta_cmd->add_option("--area", dl.area, "barrier area Vb*L (eV nm)")->required();
  delta_cmd->add_option("--heights-ev", dl.heights_ev,
                        "barrier heights (eV); default 20 log-spaced from 10 E to 1e4 E");
  delta_cmd->add_option("--mass-kg", dl.mass_kg, "particle mass (kg)")->capture_default_str();
  common(delta_cmd);
  delta_cmd->callback([&] {
    action = [&] {
      std::vector<double> heights;
      if (dl.heights_ev.empty()) {
        heights = sweep::geomspace(10.0 * dl.energy_ev * eV, 1e4 * dl.energy_ev * eV, 20);
      } else {
        for (double h : dl.heights_ev) heights.push_back(h * eV);
      }
      const auto schedule = qm::delta_limit_schedule(dl.energy_ev * eV, dl.area * eV * 1e-9, heights, dl.mass_kg);
      SweepTable t;
      t.columns = {"vb_j", "L_m", "T", "R", "T_delta", "R_delta"};
      for (const auto& r : schedule) t.rows.push_back({r.height, r.width, r.rect.T, r.rect.R, r.delta.T, r.delta.R});
      stamp(t, "delta-limit");
      meta(t, "energy_j", dl.energy_ev * eV);
      meta(t, "area_jm", dl.area * eV * 1e-9);
      return t;
    };
  });

  // table1
  struct {
    double f_ghz = 3, r_mm = 0.04, anchor_a_mm = 10, anchor_b_mm = 10;
    int rows = 5;
  } t1;
  auto* t1_cmd = app.add_subcommand("table1", "constant Vb*b lattice schedule for b = 10..1 mm");
  t1_cmd->add_option("--f-ghz", t1.f_ghz, "frequency (GHz)")->capture_default_str();
  t1_cmd->add_option("--r-mm", t1.r_mm, "wire radius (mm)")->capture_default_str();
  t1_cmd->add_option("--anchor-a-mm", t1.anchor_a_mm, "a of the anchor row (mm)")->capture_default_str();
  t1_cmd->add_option("--anchor-b-mm", t1.anchor_b_mm, "b of the anchor row (mm)")->capture_default_str();
  t1_cmd->add_option("--rows", t1.rows, "rows N for the slab T and R columns")->capture_default_str();
  common(t1_cmd);
  t1_cmd->callback([&] {
    action = [&] {
      sweep::TableOneSpec spec;
      spec.frequency = t1.f_ghz * 1e9;
      spec.wire_radius = t1.r_mm * 1e-3;
      spec.anchor_a = t1.anchor_a_mm * 1e-3;
      spec.anchor_b = t1.anchor_b_mm * 1e-3;
      spec.rows = t1.rows;
      auto t = sweep::table1(spec);
      stamp(t, "table1");
      return t;
    };
  });

  std::vector<const char*> argv{"analog-bench"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    emit(action(), output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace analog
