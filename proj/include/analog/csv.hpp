#pragma once

#include <string>
#include <string_view>

#include "analog/table.hpp"

namespace analog::io {

/// 17 significant digits (%.17g), enough to parse back to the same double.
std::string format_double(double value);

/// Header row, then one line per row; '\n' line endings. Metadata is not
/// written (it belongs to the JSON envelope).
std::string write_csv(const SweepTable& table);

/// Inverse of write_csv. MalformedRow on ragged rows or unparseable cells.
SweepTable read_csv(std::string_view text);

/// {"metadata": {...}, "columns": [...], "rows": [[...], ...]}
std::string write_json_envelope(const SweepTable& table);

}  // namespace analog::io
