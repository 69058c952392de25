#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "analog/csv.hpp"
#include "analog/em_scatter.hpp"
#include "analog/errors.hpp"
#include "analog/qm_scatter.hpp"
#include "analog/sweep.hpp"

using namespace analog;
using namespace analog::sweep;

namespace {

constexpr double kPi = std::numbers::pi;
const wire::WireArraySpec kArray{0.04e-3, 10e-3, 5e-3, 5};

struct Fit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  Fit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(y[i] - (fit.intercept + fit.slope * x[i])));
  }
  return fit;
}

void check_probabilities(const SweepTable& t) {
  for (const char* name : {"T", "R", "s11_sq", "s21_sq"}) {
    if (std::find(t.columns.begin(), t.columns.end(), name) == t.columns.end()) continue;
    for (double v : t.column_values(name)) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
    }
  }
}

}  // namespace

TEST_CASE("axis helpers") {
  CHECK(linspace(1.0, 2.0, 3) == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(linspace(4.0, 9.0, 1) == std::vector<double>{4.0});
  const auto g = geomspace(1.0, 100.0, 3);
  CHECK(g.front() == 1.0);
  CHECK(g[1] == doctest::Approx(10.0));
  CHECK(g.back() == 100.0);
  CHECK_THROWS_AS(validate_axis(std::vector<double>{}, "x"), Error);
  CHECK_THROWS_AS(validate_axis(std::vector<double>{1.0, 1.0}, "x"), Error);
  CHECK_THROWS_AS(validate_axis(std::vector<double>{1.0, 2.0, 1.5}, "x"), Error);
  CHECK_NOTHROW(validate_axis(std::vector<double>{3.0, 2.0, 1.0}, "x"));
}

TEST_CASE("frequency sweep of the wire array") {
  const auto freqs = linspace(1e9, 10e9, 300);
  const auto t = sweep_frequency(kArray, freqs);
  REQUIRE(t.rows.size() == 300);
  CHECK(t.columns == std::vector<std::string>{"f_hz", "eps_re", "eps_im", "n_re", "n_im", "ep_j", "vb_j",
                                              "s11_sq", "s21_sq"});
  CHECK(*t.meta("kind") == "frequency");
  REQUIRE(t.meta("note") != nullptr);
  check_probabilities(t);

  int crossings = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(std::abs(t.at(i, "s11_sq") + t.at(i, "s21_sq") - 1.0) < 1e-12);
    CHECK(t.at(i, "ep_j") == constants().h * freqs[i]);
    if (i > 0 && std::signbit(t.at(i, "eps_re")) != std::signbit(t.at(i - 1, "eps_re"))) {
      ++crossings;
      CHECK(freqs[i] > 8.3e9);
      CHECK(freqs[i - 1] < 8.7e9);
    }
  }
  CHECK(crossings == 1);
}

TEST_CASE("rows can be recomputed standalone") {
  const auto freqs = linspace(1e9, 10e9, 37);
  const auto t = sweep_frequency(kArray, freqs);
  for (std::size_t i : {0u, 13u, 36u}) {
    const auto m = wire::brown_response(kArray, freqs[i]);
    const auto sp = em::solve_sparams({m.index, m.impedance, kArray.thickness()},
                                      em::EmWave::from_frequency(freqs[i]));
    CHECK(t.at(i, "eps_re") == m.permittivity.real());
    CHECK(t.at(i, "n_im") == m.index.imag());
    CHECK(t.at(i, "vb_j") == wire::effective_barrier(kArray, freqs[i]).barrier_height);
    CHECK(t.at(i, "s21_sq") == sp.transmittance());
  }

  const auto heights = linspace(0.5, 3.0, 11);
  const double e = constants().eV;
  std::vector<double> vb(heights.size());
  std::transform(heights.begin(), heights.end(), vb.begin(), [&](double h) { return h * e; });
  const auto bh = sweep_barrier_height(e, 1e-9, vb);
  const auto direct = qm::rt_rect({vb[4], 1e-9}, e);
  CHECK(bh.at(4, "T") == direct.T);
  CHECK(bh.at(4, "R") == direct.R);
}

TEST_CASE("identical specs give byte-identical output") {
  SweepSpec spec;
  spec.axis = linspace(1e9, 10e9, 120);
  const auto a = io::write_csv(run_sweep(spec));
  const auto b = io::write_csv(run_sweep(spec));
  CHECK(a == b);
  CHECK(io::write_json_envelope(run_sweep(spec)) == io::write_json_envelope(run_sweep(spec)));
}

TEST_CASE("wire radius sweep") {
  const auto radii = linspace(0.01e-3, 0.1e-3, 50);
  const auto t = sweep_wire_radius(kArray, radii);
  REQUIRE(t.rows.size() == 50);
  CHECK(*t.meta("frequency_hz") == "9000000000");
  check_probabilities(t);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(std::abs(t.at(i, "T") + t.at(i, "R") - 1.0) < 1e-12);
    CHECK(t.at(i, "d_m") == 2.0 * radii[i]);
    if (i > 0) CHECK(t.at(i, "eps_re") < t.at(i - 1, "eps_re"));
  }
  // Thin wires propagate (eps > 0); the sign change is inside the axis.
  CHECK(t.at(0, "eps_re") > 0.0);
  CHECK(t.rows.back()[t.column("eps_re")] < 0.0);
  for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
    const double T = t.at(i, "T");
    if (t.at(i + 1, "eps_re") > 0.0 && T > t.at(i - 1, "T") && T > t.at(i + 1, "T")) {
      CHECK(T > t.at(i, "R"));
    }
  }
  CHECK_THROWS_AS(sweep_wire_radius(kArray, std::vector<double>{2e-3}), Error);
}

TEST_CASE("permittivity is linear in wire diameter" * doctest::should_fail()) {
  // Brown's index depends on the radius through ln(a / 2 pi r), so Re(eps)
  // bends visibly over a tenfold range of diameters.
  const auto t = sweep_wire_radius(kArray, linspace(0.01e-3, 0.1e-3, 50));
  const auto d = t.column_values("d_m");
  const auto eps = t.column_values("eps_re");
  const auto fit = least_squares(d, eps);
  const auto [lo, hi] = std::minmax_element(eps.begin(), eps.end());
  CHECK(fit.max_residual < 0.02 * (*hi - *lo));
}

TEST_CASE("solving for the energy ratio") {
  const double f1 = solve_ratio_frequency(kArray, 1.0);
  const auto b = wire::effective_barrier(kArray, f1);
  CHECK(std::abs(b.photon_energy - b.barrier_height) < 1e-12 * b.photon_energy);
  for (double ratio : {0.95, 1.05}) {
    const auto br = wire::effective_barrier(kArray, solve_ratio_frequency(kArray, ratio));
    CHECK(br.photon_energy == doctest::Approx(ratio * br.barrier_height).epsilon(1e-12));
  }
  try {
    solve_ratio_frequency(kArray, 1.0, {1e9, 2e9});
    FAIL("expected NoCrossingInBand");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoCrossingInBand);
  }
}

TEST_CASE("below the barrier T decays at twice the attenuation rate") {
  std::vector<double> rows(200);
  std::iota(rows.begin(), rows.end(), 1.0);
  const auto t = sweep_width(kArray, 0.95, rows);
  const double rho = std::stod(*t.meta("rho_per_m"));
  REQUIRE(rho > 0.0);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double rl = rho * t.at(i, "L_m");
    CHECK(t.at(i, "nk0L_im") == doctest::Approx(rl).epsilon(1e-12));
    if (rl < 1.0 || rl > 5.0) continue;
    x.push_back(t.at(i, "L_m"));
    y.push_back(std::log(t.at(i, "T")));
  }
  REQUIRE(x.size() >= 5);
  const auto fit = least_squares(x, y);
  CHECK(fit.slope == doctest::Approx(-2.0 * rho).epsilon(0.01));
  check_probabilities(t);
}

TEST_CASE("continuous-width QM barrier decays the same way") {
  const double e = constants().eV;
  const auto widths = linspace(0.1e-9, 3e-9, 400);
  const auto t = sweep_width_qm(e, 0.95, widths);
  const double rho = std::stod(*t.meta("q_im_per_m"));
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double rl = rho * widths[i];
    if (rl < 3.0 || rl > 8.0) continue;
    x.push_back(widths[i]);
    y.push_back(std::log(t.at(i, "T")));
  }
  REQUIRE(x.size() > 10);
  CHECK(least_squares(x, y).slope == doctest::Approx(-2.0 * rho).epsilon(0.01));
}

TEST_CASE("above the barrier R vanishes at qL = m pi and sometimes exceeds T") {
  const double e = constants().eV;
  const auto widths = linspace(0.05e-9, 20e-9, 4000);
  const double step = widths[1] - widths[0];
  const auto t = sweep_width_qm(e, 1.05, widths);
  const double q = std::stod(*t.meta("q_re_per_m"));
  int zeros = 0;
  for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
    const double r = t.at(i, "R");
    if (r < t.at(i - 1, "R") && r < t.at(i + 1, "R")) {
      ++zeros;
      const double m = std::round(t.at(i, "qL_re") / kPi);
      CHECK(std::abs(widths[i] - m * kPi / q) <= step);
      CHECK(r < 1e-4);
    }
  }
  CHECK(zeros >= 3);
  const auto rows = t.column_values("R");
  const auto trans = t.column_values("T");
  bool t_below_r = false;
  for (std::size_t i = 0; i < rows.size(); ++i) t_below_r = t_below_r || trans[i] < rows[i];
  CHECK(t_below_r);
  check_probabilities(t);

  // Exactly at qL = m pi the barrier is reflectionless.
  const double exact = 3.0 * kPi / q;
  CHECK(qm::rt_rect({e / 1.05, exact}, e).R < 1e-10);

  std::vector<double> n_rows(40);
  std::iota(n_rows.begin(), n_rows.end(), 1.0);
  const auto em = sweep_width(kArray, 1.05, n_rows);
  bool em_t_below_r = false;
  for (std::size_t i = 0; i < em.rows.size(); ++i) em_t_below_r = em_t_below_r || em.at(i, "T") < em.at(i, "R");
  CHECK(em_t_below_r);
  CHECK(*em.meta("kind") == "width_above");
}

TEST_CASE("width sweeps reject fractional row counts") {
  CHECK_THROWS_AS(sweep_width(kArray, 0.95, std::vector<double>{1.5}), Error);
  CHECK_THROWS_AS(sweep_width(kArray, 0.95, std::vector<double>{0.0, 1.0}), Error);
}

TEST_CASE("constant Vb*b lattice schedule") {
  const auto t = table1();
  REQUIRE(t.rows.size() == 10);
  const double expected_mm[] = {10.0, 9.876, 9.763, 9.660, 9.567, 9.483, 9.409, 9.343, 9.285, 9.237};
  const double target = std::stod(*t.meta("target_vb_b_jm"));
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(std::abs(t.at(i, "a_m") * 1e3 - expected_mm[i]) / expected_mm[i] < 0.005);
    CHECK(t.at(i, "vb_b_jm") == doctest::Approx(target).epsilon(1e-9));
    CHECK(std::abs(t.at(i, "T") + t.at(i, "R") - 1.0) < 1e-12);
  }
}

TEST_CASE("delta sweep pairs the QM schedule with the lattice schedule") {
  const double e = constants().eV;
  const auto heights = geomspace(10.0 * e, 1e4 * e, 12);
  const auto d = sweep_delta(e, e * 1e-9, heights);
  REQUIRE(d.qm.rows.size() == 12);
  check_probabilities(d.qm);
  for (std::size_t i = 0; i < d.qm.rows.size(); ++i) {
    CHECK(d.qm.at(i, "vb_j") * d.qm.at(i, "L_m") == doctest::Approx(e * 1e-9).epsilon(1e-12));
    CHECK(std::abs(d.qm.at(i, "T") + d.qm.at(i, "R") - 1.0) < 1e-12);
  }
  const double last = std::abs(d.qm.rows.back()[2] - d.qm.rows.back()[4]) / d.qm.rows.back()[4];
  CHECK(last < 0.01);
  CHECK(io::write_csv(d.em) == io::write_csv(table1()));
}

TEST_CASE("config-driven dispatch") {
  CHECK(parse_sweep_kind("width_above") == SweepKind::width_above);
  CHECK(to_string(SweepKind::delta_limit) == "delta_limit");
  CHECK_THROWS_AS(parse_sweep_kind("nope"), Error);

  SweepSpec spec;
  spec.kind = SweepKind::width_below;
  spec.axis = {1, 2, 3};
  CHECK(std::stod(*run_sweep(spec).meta("ratio")) == 0.95);
  spec.domain = Domain::qm;
  spec.energy = constants().eV;
  spec.axis = {1e-10, 2e-10};
  CHECK(*run_sweep(spec).meta("domain") == "qm");

  spec.kind = SweepKind::delta_limit;
  spec.area = constants().eV * 1e-9;
  spec.axis = {10.0 * spec.energy, 100.0 * spec.energy};
  CHECK(run_sweep(spec).columns.back() == "R_delta");
}
