#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "analog/cli.hpp"
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

namespace py = pybind11;
using namespace analog;

namespace {

py::dict matrix_dict(const TransferMatrix2& m) {
  py::dict d;
  d["m11"] = m.m11;
  d["m12"] = m.m12;
  d["m21"] = m.m21;
  d["m22"] = m.m22;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rectangular-barrier scattering, slab S-parameters and wire-array media";
  m.attr("__version__") = std::string(version());

  py::register_exception<Error>(m, "AnalogError", PyExc_ValueError);

  m.def("constants", [] {
    const auto& c = constants();
    py::dict d;
    d["h"] = c.h;
    d["hbar"] = c.hbar;
    d["c0"] = c.c0;
    d["m_e"] = c.m_e;
    d["Z0"] = c.Z0;
    d["eV"] = c.eV;
    return d;
  });

  py::class_<ScatterResult>(m, "ScatterResult")
      .def_readonly("r", &ScatterResult::r)
      .def_readonly("t", &ScatterResult::t)
      .def_readonly("R", &ScatterResult::R)
      .def_readonly("T", &ScatterResult::T)
      .def("__repr__", [](const ScatterResult& s) {
        std::ostringstream os;
        os << "ScatterResult(R=" << s.R << ", T=" << s.T << ")";
        return os.str();
      });

  py::class_<em::SParams>(m, "SParams")
      .def_readonly("s11", &em::SParams::s11)
      .def_readonly("s21", &em::SParams::s21)
      .def_property_readonly("reflectance", &em::SParams::reflectance)
      .def_property_readonly("transmittance", &em::SParams::transmittance);

  py::class_<wire::WireArraySpec>(m, "WireArraySpec")
      .def(py::init([](double r, double a, double b, int rows) { return wire::WireArraySpec{r, a, b, rows}; }),
           py::arg("wire_radius"), py::arg("transverse_pitch"), py::arg("longitudinal_pitch"), py::arg("rows") = 1)
      .def_readwrite("wire_radius", &wire::WireArraySpec::wire_radius)
      .def_readwrite("transverse_pitch", &wire::WireArraySpec::transverse_pitch)
      .def_readwrite("longitudinal_pitch", &wire::WireArraySpec::longitudinal_pitch)
      .def_readwrite("rows", &wire::WireArraySpec::rows)
      .def_property_readonly("thickness", &wire::WireArraySpec::thickness);

  py::class_<SweepTable>(m, "SweepTable")
      .def_readonly("columns", &SweepTable::columns)
      .def_readonly("rows", &SweepTable::rows)
      .def_readonly("metadata", &SweepTable::metadata)
      .def("column", &SweepTable::column_values, py::arg("name"))
      .def("__len__", [](const SweepTable& t) { return t.rows.size(); });

  m.def(
      "rt_rect",
      [](double height, double width, double energy, double mass) {
        return qm::rt_rect({height, width, mass}, energy);
      },
      py::arg("height"), py::arg("width"), py::arg("energy"), py::arg("mass") = constants().m_e,
      "r and t of a rectangular barrier (SI units).");
  m.def(
      "transfer_matrix_rect",
      [](double height, double width, double energy, double mass, double z_start) {
        return matrix_dict(qm::transfer_matrix_rect({height, width, mass}, energy, z_start));
      },
      py::arg("height"), py::arg("width"), py::arg("energy"), py::arg("mass") = constants().m_e,
      py::arg("z_start") = 0.0);
  m.def(
      "rt_delta",
      [](double strength, double energy, double mass) {
        const double k = qm::free_wavenumber(energy, mass);
        return qm::rt_delta(qm::DeltaBarrierSpec::from_wavenumber(strength, k, mass), k);
      },
      py::arg("strength"), py::arg("energy"), py::arg("mass") = constants().m_e);

  m.def(
      "solve_sparams",
      [](Complex index, Complex impedance, double thickness, double frequency) {
        return em::solve_sparams({index, impedance, thickness}, em::EmWave::from_frequency(frequency));
      },
      py::arg("index"), py::arg("impedance"), py::arg("thickness"), py::arg("frequency"));

  m.def("brown_index", &wire::brown_index, py::arg("spec"), py::arg("frequency"));
  m.def("brown_impedance", &wire::brown_impedance, py::arg("spec"), py::arg("frequency"), py::arg("index"));
  m.def(
      "brown_response",
      [](const wire::WireArraySpec& spec, double f) {
        const auto r = wire::brown_response(spec, f);
        py::dict d;
        d["frequency"] = r.frequency;
        d["index"] = r.index;
        d["impedance"] = r.impedance;
        d["permittivity"] = r.permittivity;
        d["permeability"] = r.permeability;
        return d;
      },
      py::arg("spec"), py::arg("frequency"));
  m.def(
      "effective_barrier",
      [](const wire::WireArraySpec& spec, double f) {
        const auto b = wire::effective_barrier(spec, f);
        py::dict d;
        d["photon_energy"] = b.photon_energy;
        d["barrier_height"] = b.barrier_height;
        d["loss_component"] = b.loss_component;
        d["effective_mass"] = b.effective_mass;
        d["thickness"] = b.thickness;
        return d;
      },
      py::arg("spec"), py::arg("frequency"));
  m.def(
      "solve_lattice_a",
      [](double b, double target, double f, double r) { return wire::solve_lattice_a(b, target, f, r).transverse_pitch; },
      py::arg("b"), py::arg("target"), py::arg("frequency"), py::arg("wire_radius"));

  m.def(
      "nrw_extract",
      [](const std::vector<double>& f, const std::vector<Complex>& s11, const std::vector<Complex>& s21,
         double thickness, std::optional<int> initial_branch, bool field_s11) {
        if (f.size() != s11.size() || f.size() != s21.size()) {
          throw Error(ErrorKind::InvalidArgument, "f, s11 and s21 must have equal length");
        }
        nrw::SParamSeries series;
        series.thickness = thickness;
        for (std::size_t i = 0; i < f.size(); ++i) series.rows.push_back({f[i], s11[i], s21[i]});
        nrw::NrwOptions opt;
        opt.initial_branch = initial_branch;
        opt.convention = field_s11 ? nrw::S11Convention::electric_field : nrw::S11Convention::slab_model;
        const auto res = nrw::extract(series, opt);
        py::dict d;
        std::vector<Complex> z, n, eps, mu;
        std::vector<int> branch;
        std::vector<bool> indeterminate;
        for (const auto& r : res.rows) {
          z.push_back(r.impedance);
          n.push_back(r.index);
          eps.push_back(r.permittivity);
          mu.push_back(r.permeability);
          branch.push_back(r.branch);
          indeterminate.push_back(r.indeterminate);
        }
        d["impedance"] = z;
        d["index"] = n;
        d["permittivity"] = eps;
        d["permeability"] = mu;
        d["branch"] = branch;
        d["indeterminate"] = indeterminate;
        return d;
      },
      py::arg("frequencies"), py::arg("s11"), py::arg("s21"), py::arg("thickness"),
      py::arg("initial_branch") = std::nullopt, py::arg("field_s11") = false);

  m.def(
      "em_to_qm",
      [](const std::vector<double>& f, const std::vector<Complex>& n, double thickness, double k_min,
         double k_max, double mass) {
        if (f.size() != n.size()) throw Error(ErrorKind::InvalidArgument, "f and n must have equal length");
        std::vector<mapping::IndexSample> series;
        for (std::size_t i = 0; i < f.size(); ++i) series.push_back({f[i], n[i], std::nullopt});
        const auto sys = mapping::em_to_qm(series, thickness, {k_min, k_max, mass});
        const auto rt = mapping::mapped_coefficients(sys);
        py::dict d;
        std::vector<double> k, e0, vb, width;
        std::vector<Complex> q, r, t;
        for (std::size_t i = 0; i < sys.samples.size(); ++i) {
          const auto& s = sys.samples[i];
          k.push_back(s.k);
          e0.push_back(s.energy);
          vb.push_back(s.barrier_height);
          width.push_back(s.width);
          q.push_back(s.q.value);
          r.push_back(rt[i].r);
          t.push_back(rt[i].t);
        }
        d["k"] = k;
        d["energy"] = e0;
        d["barrier_height"] = vb;
        d["width"] = width;
        d["q"] = q;
        d["r"] = r;
        d["t"] = t;
        return d;
      },
      py::arg("frequencies"), py::arg("index"), py::arg("thickness"), py::arg("k_min") = 1e9,
      py::arg("k_max") = 1e10, py::arg("mass") = constants().m_e);
  m.def(
      "equivalence_check",
      [](const std::vector<double>& f, const std::vector<Complex>& n, const std::vector<Complex>& z,
         double thickness) {
        if (f.size() != n.size() || f.size() != z.size()) {
          throw Error(ErrorKind::InvalidArgument, "f, n and z must have equal length");
        }
        std::vector<mapping::IndexSample> series;
        for (std::size_t i = 0; i < f.size(); ++i) series.push_back({f[i], n[i], z[i]});
        const auto sys = mapping::em_to_qm(series, thickness);
        const auto formal = mapping::equivalence_check(sys, mapping::EquivalenceMode::formal);
        const auto physical = mapping::equivalence_check(sys, mapping::EquivalenceMode::physical);
        py::dict d;
        d["formal_r"] = formal.max_abs_dev_r;
        d["formal_t"] = formal.max_abs_dev_t;
        d["physical_r"] = physical.max_abs_dev_r;
        d["physical_t"] = physical.max_abs_dev_t;
        return d;
      },
      py::arg("frequencies"), py::arg("index"), py::arg("impedance"), py::arg("thickness"));

  m.def(
      "sweep_frequency",
      [](const wire::WireArraySpec& spec, const std::vector<double>& f) { return sweep::sweep_frequency(spec, f); },
      py::arg("spec"), py::arg("frequencies"));
  m.def(
      "sweep_wire_radius",
      [](const wire::WireArraySpec& base, const std::vector<double>& radii, double f) {
        return sweep::sweep_wire_radius(base, radii, f);
      },
      py::arg("base"), py::arg("radii"), py::arg("frequency") = 9e9);
  m.def(
      "sweep_width",
      [](const wire::WireArraySpec& base, double ratio, const std::vector<double>& rows) {
        return sweep::sweep_width(base, ratio, rows);
      },
      py::arg("base"), py::arg("ratio"), py::arg("rows"));
  m.def("table1", [] { return sweep::table1(); });

  m.def("write_csv", &io::write_csv, py::arg("table"));
  m.def("read_csv", &io::read_csv, py::arg("text"));
  m.def(
      "parse_touchstone",
      [](const std::string& text) {
        const auto doc = io::parse_touchstone(text);
        py::dict d;
        std::vector<double> f;
        std::vector<Complex> s11, s21, s12, s22;
        for (const auto& r : doc.rows) {
          f.push_back(r.frequency);
          s11.push_back(r.s11);
          s21.push_back(r.s21);
          s12.push_back(r.s12);
          s22.push_back(r.s22);
        }
        d["frequency"] = f;
        d["s11"] = s11;
        d["s21"] = s21;
        d["s12"] = s12;
        d["s22"] = s22;
        d["warnings"] = doc.warnings;
        return d;
      },
      py::arg("text"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the analog-bench CLI in-process; returns (exit_code, stdout, stderr).");
}
