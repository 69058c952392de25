#include "analog/config.hpp"

#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>

#include "analog/errors.hpp"

namespace analog::io {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ConfigError, message); }

void only_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(std::string(where) + " must be an object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || item.key() == a;
    if (!ok) fail("unknown key '" + item.key() + "' in " + std::string(where));
  }
}

double number(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback) {
  return obj.contains(key) ? number(obj, key) : fallback;
}

double required(const json& obj, const char* key, std::string_view kind) {
  if (!obj.contains(key)) fail(std::string("'") + key + "' is required for kind " + std::string(kind));
  return number(obj, key);
}

std::vector<double> read_axis(const json& axis, Dimension dim, bool rows_axis) {
  only_keys(axis, "axis", {"values", "start", "stop", "points", "spacing", "unit"});
  double scale = 1.0;
  if (axis.contains("unit")) {
    if (rows_axis) fail("a row-count axis takes no unit");
    const Unit unit = parse_unit(axis.at("unit").get<std::string>());
    if (dimension_of(unit) != dim) fail("axis unit has the wrong dimension");
    scale = convert(1.0, unit, [&] {
      switch (dim) {
        case Dimension::frequency: return Unit::Hz;
        case Dimension::length: return Unit::m;
        case Dimension::energy: return Unit::J;
        case Dimension::impedance: return Unit::ohm;
        case Dimension::mass: return Unit::kg;
      }
      return Unit::m;
    }());
  } else if (!rows_axis) {
    fail("axis needs a 'unit'");
  }

  std::vector<double> values;
  if (axis.contains("values")) {
    if (axis.contains("start") || axis.contains("stop") || axis.contains("points")) {
      fail("axis takes either 'values' or start/stop/points");
    }
    for (const auto& v : axis.at("values")) {
      if (!v.is_number()) fail("axis values must be numbers");
      values.push_back(v.get<double>() * scale);
    }
  } else {
    const double start = number(axis, "start") * scale;
    const double stop = number(axis, "stop") * scale;
    const auto& pts = axis.at("points");
    if (!pts.is_number_integer() || pts.get<long long>() < 1) fail("'points' must be a positive integer");
    const auto n = static_cast<std::size_t>(pts.get<long long>());
    const std::string spacing = axis.value("spacing", std::string("linear"));
    if (spacing == "linear") values = sweep::linspace(start, stop, n);
    else if (spacing == "geometric") values = sweep::geomspace(start, stop, n);
    else fail("spacing must be 'linear' or 'geometric'");
  }
  return values;
}

RunConfig from_json(const json& doc) {
  only_keys(doc, "config", {"kind", "domain", "wire", "frequency_ghz", "energy_ev", "width_nm", "area_ev_nm",
                            "mass_kg", "ratio", "band_ghz", "axis"});
  RunConfig cfg;
  auto& s = cfg.sweep;
  if (!doc.contains("kind") || !doc.at("kind").is_string()) fail("'kind' (string) is required");
  const std::string kind = doc.at("kind").get<std::string>();
  s.kind = sweep::parse_sweep_kind(kind);

  if (doc.contains("domain")) {
    const std::string d = doc.at("domain").get<std::string>();
    if (d == "em") s.domain = sweep::Domain::em;
    else if (d == "qm") s.domain = sweep::Domain::qm;
    else fail("domain must be 'em' or 'qm'");
  }
  if (doc.contains("wire")) {
    const auto& w = doc.at("wire");
    only_keys(w, "wire", {"r_mm", "a_mm", "b_mm", "rows"});
    s.wire.wire_radius = number_or(w, "r_mm", s.wire.wire_radius * 1e3) * 1e-3;
    s.wire.transverse_pitch = number_or(w, "a_mm", s.wire.transverse_pitch * 1e3) * 1e-3;
    s.wire.longitudinal_pitch = number_or(w, "b_mm", s.wire.longitudinal_pitch * 1e3) * 1e-3;
    if (w.contains("rows")) {
      if (!w.at("rows").is_number_integer()) fail("'rows' must be an integer");
      s.wire.rows = w.at("rows").get<int>();
    }
  }
  const double eV = constants().eV;
  s.frequency = number_or(doc, "frequency_ghz", s.frequency * 1e-9) * 1e9;
  s.mass = number_or(doc, "mass_kg", s.mass);
  s.ratio = number_or(doc, "ratio", 0.0);
  if (doc.contains("band_ghz")) {
    const auto& b = doc.at("band_ghz");
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
      fail("'band_ghz' must be [f_min, f_max]");
    }
    s.band = {b[0].get<double>() * 1e9, b[1].get<double>() * 1e9};
  }

  using sweep::SweepKind;
  const bool width = s.kind == SweepKind::width_below || s.kind == SweepKind::width_above;
  const bool rows_axis = width && s.domain == sweep::Domain::em;
  if (s.kind == SweepKind::barrier_height || s.kind == SweepKind::delta_limit ||
      (width && s.domain == sweep::Domain::qm)) {
    s.energy = required(doc, "energy_ev", kind) * eV;
  }
  if (s.kind == SweepKind::barrier_height) s.width = required(doc, "width_nm", kind) * 1e-9;
  if (s.kind == SweepKind::delta_limit) s.area = required(doc, "area_ev_nm", kind) * eV * 1e-9;

  Dimension dim = Dimension::frequency;
  switch (s.kind) {
    case SweepKind::frequency: dim = Dimension::frequency; break;
    case SweepKind::wire_radius: dim = Dimension::length; break;
    case SweepKind::barrier_height:
    case SweepKind::delta_limit: dim = Dimension::energy; break;
    case SweepKind::width_below:
    case SweepKind::width_above: dim = Dimension::length; break;
  }
  if (doc.contains("axis")) {
    s.axis = read_axis(doc.at("axis"), dim, rows_axis);
  } else if (s.kind == SweepKind::frequency) {
    s.axis = sweep::linspace(1e9, 10e9, 300);
  } else if (s.kind == SweepKind::wire_radius) {
    s.axis = sweep::linspace(0.01e-3, 0.1e-3, 50);
  } else if (rows_axis) {
    s.axis = sweep::linspace(1.0, 20.0, 20);
  } else {
    fail("'axis' is required for kind " + kind);
  }
  return cfg;
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    return from_json(doc);
  } catch (const json::exception& e) {
    fail(std::string("bad value: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    fail(e.what());
  }
}

RunConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace analog::io
