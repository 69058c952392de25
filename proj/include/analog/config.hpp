#pragma once

#include <filesystem>
#include <string_view>

#include "analog/sweep.hpp"

// JSON run configuration for `analog-bench sweep`. Field names carry their
// unit; unknown keys are rejected with ConfigError.
//
// {
//   "kind": "frequency" | "wire_radius" | "barrier_height" |
//           "width_below" | "width_above" | "delta_limit",
//   "domain": "em" | "qm",                      (width sweeps)
//   "wire": {"r_mm": 0.04, "a_mm": 10, "b_mm": 5, "rows": 5},
//   "frequency_ghz": 9,                         (wire_radius)
//   "energy_ev": 1, "width_nm": 1, "area_ev_nm": 1, "mass_kg": 9.1e-31,
//   "ratio": 0.95, "band_ghz": [1, 10],
//   "axis": {"start": 1, "stop": 10, "points": 300,
//            "spacing": "linear" | "geometric", "unit": "GHz"}
//        or {"values": [1, 2, 3], "unit": "GHz"}
// }
//
// Axis defaults: frequency 300 points over 1-10 GHz; wire_radius 50 points
// over r = 0.01-0.1 mm; EM width sweeps N = 1..20. Row-count axes take no unit.
namespace analog::io {

struct RunConfig {
  sweep::SweepSpec sweep;
};

RunConfig parse_config(std::string_view json_text);
RunConfig read_config(const std::filesystem::path& path);

}  // namespace analog::io
