#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "analog/cli.hpp"
#include "analog/csv.hpp"
#include "analog/em_scatter.hpp"
#include "analog/nrw.hpp"
#include "analog/qm_em_map.hpp"
#include "analog/qm_scatter.hpp"
#include "analog/sweep.hpp"
#include "analog/touchstone.hpp"
#include "analog/version.hpp"

using namespace analog;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kVacuum = std::string(ANALOG_TEST_FIXTURES) + "/vacuum.s2p";

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("analog_cli_" + name);
}

}  // namespace

TEST_CASE("version and help") {
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(std::string(version())) == 0);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("qm-barrier") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"qm-barrier", "--vb-ev", "5"}).code == 2);
  CHECK(run({"qm-barrier", "--vb-ev", "five", "--width-mm", "1", "--energy-ev", "1"}).code == 2);
  CHECK(run({"nrw", "--input", "/does/not/exist.s2p", "--thickness-mm", "5"}).code == 2);
  CHECK(run({"map", "--source", "brown"}).code == 2);
  CHECK(run({"map", "--source", "s2p", "--input", kVacuum}).code == 2);
  CHECK(run({"map", "--mode", "loose", "--r-mm", "0.04", "--a-mm", "10", "--b-mm", "5"}).code == 2);
}

TEST_CASE("computation errors exit with 1 and name the error") {
  const auto r = run({"em-slab", "--n-re", "1", "--z-re", "0", "--thickness-mm", "1", "--f-ghz", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ZeroImpedance") != std::string::npos);
  const auto g = run({"wire-array", "--r-mm", "5", "--a-mm", "10", "--b-mm", "5"});
  CHECK(g.code == 1);
  CHECK(g.err.find("GeometryViolation") != std::string::npos);
}

TEST_CASE("qm-barrier equals the library call") {
  const auto r = run({"qm-barrier", "--vb-ev", "5", "--width-mm", "1e-6", "--energy-ev", "2.5"});
  REQUIRE(r.code == 0);
  const double eV = constants().eV;
  const auto rt = qm::rt_rect({5 * eV, 1e-9}, 2.5 * eV);
  const auto t = io::read_csv(r.out);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.at(0, "r_re") == rt.r.real());
  CHECK(t.at(0, "t_im") == rt.t.imag());
  CHECK(t.at(0, "R") == rt.R);
  CHECK(t.at(0, "T") == rt.T);
  CHECK(std::abs(t.at(0, "R") + t.at(0, "T") - 1.0) < 1e-12);
}

TEST_CASE("em-slab equals the library call") {
  const auto r = run({"em-slab", "--n-re", "2", "--n-im", "0.1", "--z-re", "0.5", "--thickness-mm", "5",
                      "--f-ghz", "3"});
  REQUIRE(r.code == 0);
  const auto sp = em::solve_sparams({{2.0, 0.1}, 0.5, 5e-3}, em::EmWave::from_frequency(3e9));
  const auto t = io::read_csv(r.out);
  CHECK(t.at(0, "s11_re") == sp.s11.real());
  CHECK(t.at(0, "s21_im") == sp.s21.imag());
}

TEST_CASE("wire-array equals sweep_frequency") {
  const auto r = run({"wire-array", "--r-mm", "0.04", "--a-mm", "10", "--b-mm", "5", "--points", "40"});
  REQUIRE(r.code == 0);
  const wire::WireArraySpec spec{0.04e-3, 10e-3, 5e-3, 5};
  CHECK(r.out == io::write_csv(sweep::sweep_frequency(spec, sweep::linspace(1e9, 10e9, 40))));
}

TEST_CASE("nrw on the vacuum fixture") {
  const auto r = run({"nrw", "--input", kVacuum, "--thickness-mm", "5"});
  REQUIRE(r.code == 0);
  const auto t = io::read_csv(r.out);
  REQUIRE(t.rows.size() >= 10);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(std::abs(t.at(i, "n_re") - 1.0) < 1e-12);
    CHECK(std::abs(t.at(i, "z_re") - 1.0) < 1e-12);
    CHECK(t.at(i, "indeterminate") == 0.0);
  }
  const auto lib = nrw::extract(io::to_series(io::read_touchstone(kVacuum), 5e-3));
  CHECK(t.at(3, "n_im") == lib.rows[3].index.imag());
}

TEST_CASE("map equals the library pipeline") {
  const auto r = run({"map", "--source", "brown", "--r-mm", "0.04", "--a-mm", "10", "--b-mm", "5", "--points", "50"});
  REQUIRE(r.code == 0);
  const wire::WireArraySpec spec{0.04e-3, 10e-3, 5e-3, 5};
  const auto sys = mapping::em_to_qm(mapping::brown_index_series(spec, sweep::linspace(1e9, 10e9, 50)), 25e-3);
  const auto rt = mapping::mapped_coefficients(sys);
  const auto t = io::read_csv(r.out);
  REQUIRE(t.rows.size() == 50);
  for (std::size_t i = 0; i < 50; i += 7) {
    CHECK(t.at(i, "t_re") == rt[i].t.real());
    CHECK(t.at(i, "vb_j") == sys.samples[i].barrier_height);
    CHECK(t.at(i, "dev_t") < 1e-10);
  }

  const auto p = run({"map", "--source", "s2p", "--input", kVacuum, "--thickness-mm", "5", "--mode", "physical",
                      "--json"});
  REQUIRE(p.code == 0);
  CHECK(p.out.find("\"mode\": \"physical\"") != std::string::npos);
}

TEST_CASE("sweep reads a config and writes to --out") {
  const auto cfg = temp_file("run.json");
  const auto out = temp_file("out.csv");
  {
    std::ofstream f(cfg);
    f << R"({"kind": "barrier_height", "energy_ev": 1, "width_nm": 1,
             "axis": {"start": 0.5, "stop": 3, "points": 6, "unit": "eV"}})";
  }
  const auto r = run({"sweep", "--config", cfg.string(), "--out", out.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  const double eV = constants().eV;
  CHECK(buf.str() == io::write_csv(sweep::sweep_barrier_height(eV, 1e-9, sweep::linspace(0.5 * eV, 3 * eV, 6))));

  {
    std::ofstream bad(cfg);
    bad << R"({"kind": "frequency", "bogus": 1})";
  }
  const auto e = run({"sweep", "--config", cfg.string()});
  CHECK(e.code == 1);
  CHECK(e.err.find("ConfigError") != std::string::npos);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}

TEST_CASE("delta-limit and table1") {
  const auto d = run({"delta-limit", "--energy-ev", "1", "--area", "1"});
  REQUIRE(d.code == 0);
  const auto t = io::read_csv(d.out);
  REQUIRE(t.rows.size() == 20);
  const auto last = t.rows.size() - 1;
  CHECK(std::abs(t.at(last, "T") - t.at(last, "T_delta")) / t.at(last, "T_delta") < 0.01);

  const auto t1 = run({"table1"});
  REQUIRE(t1.code == 0);
  CHECK(t1.out == io::write_csv(sweep::table1()));

  const auto j = run({"table1", "--json"});
  CHECK(j.out.find("\"command\": \"table1\"") != std::string::npos);
  CHECK(j.out.find("\"kind\": \"table1\"") != std::string::npos);
}
